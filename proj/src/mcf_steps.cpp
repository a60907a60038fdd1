#include "mcf/mcf_steps.hpp"

#include <array>

namespace mcf {

namespace {

struct RuleInfo {
    Rule rule;
    std::string_view slug;
    std::string_view name;
};

constexpr std::array<RuleInfo, 10> kRules{{
    {Rule::Brun, "brun", "Brun"},
    {Rule::BrunMultiplicative, "brun-mult", "Brun Multiplicative"},
    {Rule::Selmer, "selmer", "Selmer"},
    {Rule::FullySubtractive, "fully", "Fully subtractive"},
    {Rule::FullySubtractiveAsPossible, "fully-possible", "Fully subtractive as possible"},
    {Rule::Poincare, "poincare", "Poincare"},
    {Rule::JacobiPerron, "jacobi-perron", "Jacobi-Perron"},
    {Rule::JacobiPerronRotation, "jacobi-perron-rotation", "Jacobi-Perron rotation"},
    {Rule::ArnouxRauzy, "arnoux-rauzy", "Arnoux-Rauzy"},
    {Rule::RandomReduction, "random", "Random reduction"},
}};

const RuleInfo& info(Rule r) {
    for (const auto& entry : kRules) {
        if (entry.rule == r) {
            return entry;
        }
    }
    throw McfError("unknown rule");
}

bool valid_fallback(Rule r) {
    return r == Rule::Brun || r == Rule::BrunMultiplicative || r == Rule::Selmer || r == Rule::FullySubtractive ||
           r == Rule::Poincare;
}

constexpr std::string_view kFusionPrefix = "fusion-ar-";

}  // namespace

std::string_view rule_name(Rule r) { return info(r).name; }

Algorithm Algorithm::fusion(Rule fallback) {
    if (!valid_fallback(fallback)) {
        throw McfError("invalid fusion fallback: " + std::string(rule_name(fallback)));
    }
    Algorithm a(Rule::ArnouxRauzy);
    a.fallback_ = fallback;
    return a;
}

std::string Algorithm::slug() const {
    if (fallback_) {
        return std::string(kFusionPrefix) + std::string(info(*fallback_).slug);
    }
    return std::string(info(rule_).slug);
}

std::string Algorithm::display_name() const {
    if (fallback_) {
        return "Fusion of Arnoux-Rauzy and " + std::string(info(*fallback_).name);
    }
    return std::string(info(rule_).name);
}

Algorithm parse_algorithm(std::string_view slug) {
    if (slug.starts_with(kFusionPrefix)) {
        const std::string_view rest = slug.substr(kFusionPrefix.size());
        for (const auto& entry : kRules) {
            if (entry.slug == rest && valid_fallback(entry.rule)) {
                return Algorithm::fusion(entry.rule);
            }
        }
    } else {
        for (const auto& entry : kRules) {
            if (entry.slug == slug && entry.rule != Rule::JacobiPerronRotation) {
                return Algorithm(entry.rule);
            }
        }
    }
    throw McfError("unknown algorithm '" + std::string(slug) + "'");
}

std::vector<Algorithm> all_algorithms() {
    return {
        Algorithm(Rule::Brun),
        Algorithm(Rule::BrunMultiplicative),
        Algorithm(Rule::Selmer),
        Algorithm(Rule::FullySubtractive),
        Algorithm(Rule::FullySubtractiveAsPossible),
        Algorithm(Rule::Poincare),
        Algorithm(Rule::JacobiPerron),
        Algorithm(Rule::ArnouxRauzy),
        Algorithm(Rule::RandomReduction),
        Algorithm::fusion(Rule::Brun),
        Algorithm::fusion(Rule::BrunMultiplicative),
        Algorithm::fusion(Rule::Selmer),
        Algorithm::fusion(Rule::FullySubtractive),
        Algorithm::fusion(Rule::Poincare),
    };
}

std::vector<Algorithm> table_algorithms() {
    return {
        Algorithm(Rule::ArnouxRauzy),
        Algorithm(Rule::FullySubtractive),
        Algorithm(Rule::FullySubtractiveAsPossible),
        Algorithm(Rule::Selmer),
        Algorithm(Rule::Brun),
        Algorithm(Rule::BrunMultiplicative),
        Algorithm(Rule::Poincare),
        Algorithm(Rule::JacobiPerron),
        Algorithm(Rule::RandomReduction),
        Algorithm::fusion(Rule::FullySubtractive),
        Algorithm::fusion(Rule::Selmer),
        Algorithm::fusion(Rule::BrunMultiplicative),
        Algorithm::fusion(Rule::Poincare),
    };
}

RandomState make_random_state(std::uint64_t seed, const IntVector& v) {
    std::vector<std::uint32_t> material;
    material.reserve(2 + 2 * static_cast<std::size_t>(v.size()));
    material.push_back(static_cast<std::uint32_t>(seed));
    material.push_back(static_cast<std::uint32_t>(seed >> 32));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto e = static_cast<std::uint64_t>(v[i]);
        material.push_back(static_cast<std::uint32_t>(e));
        material.push_back(static_cast<std::uint32_t>(e >> 32));
    }
    std::seed_seq seq(material.begin(), material.end());
    return RandomState(seq);
}

ExpansionTrace expand(const IntVector& v, const Algorithm& algo, std::uint64_t seed) {
    detail::require_nonzero(v);
    ExpansionTrace trace;
    trace.input = v;
    RandomState rng = make_random_state(seed, v);
    IntVector current = v;
    while (true) {
        auto result = step(current, algo, &rng);
        if (auto* stop = std::get_if<StepStop>(&result)) {
            trace.status = *stop == StepStop::Terminal ? ExpansionStatus::Completed : ExpansionStatus::StoppedEarly;
            break;
        }
        auto& outcome = std::get<StepOutcome<Integer>>(result);
        current = outcome.successor;
        trace.steps.push_back(std::move(outcome));
    }
    trace.terminal = current;
    if (trace.completed()) {
        for (Eigen::Index i = 0; i < current.size(); ++i) {
            if (current[i] > 0) {
                trace.terminal_letter = Letter::from_coord(i);
            }
        }
    }
    return trace;
}

StepMatrix matrix_product(const ExpansionTrace& trace) {
    StepMatrix product = StepMatrix::Identity(trace.input.size(), trace.input.size());
    for (const auto& s : trace.steps) {
        product = mat_mul(product, s.matrix);
    }
    return product;
}

}  // namespace mcf
