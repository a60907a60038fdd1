#include "mcf/wordgen.hpp"

#include <cmath>

namespace mcf {

std::vector<Substitution> trace_substitutions(const ExpansionTrace& trace) {
    std::vector<Substitution> subs;
    subs.reserve(trace.steps.size());
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        subs.push_back(substitution_from_matrix(trace.steps[k].matrix, trace.vector_before(k)));
    }
    return subs;
}

GeneratedWord generate_word(const IntVector& v, const Algorithm& algo, std::uint64_t seed) {
    ExpansionTrace trace = expand(v, algo, seed);
    if (!trace.completed()) {
        throw ExpansionIncomplete(algo.display_name() + " stopped early on " + to_string(v) + " after " +
                                  std::to_string(trace.steps.size()) + " steps");
    }
    const auto subs = trace_substitutions(trace);
    Word w{*trace.terminal_letter};
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        w = mcf::apply(*it, w);
    }
    GeneratedWord out;
    out.word = std::move(w);
    out.input = v;
    out.gcd = gcd_of(v);
    out.trace = std::move(trace);
    return out;
}

Letter seed_letter(const Vector<double>& residual) {
    return Letter::from_coord(argsort_with_ties(residual)[0]);
}

FloatExpansion expand_float(const Vector<double>& direction, const Algorithm& algo, const FloatOptions& options) {
    if (direction.size() < 2) {
        throw DimensionMismatch("expand_float: dimension must be >= 2");
    }
    for (Eigen::Index i = 0; i < direction.size(); ++i) {
        if (!std::isfinite(direction[i])) {
            throw McfError("expand_float: non-finite entry");
        }
        if (direction[i] < 0.0) {
            throw McfError("expand_float: negative entry");
        }
    }
    auto clamp = [&](Vector<double> v) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (v[i] < options.eps) {
                v[i] = 0.0;
            }
        }
        return v;
    };

    FloatExpansion out;
    out.direction = direction;
    Vector<double> current = clamp(direction);
    if ((current.array() == 0.0).all()) {
        throw ZeroVector("expand_float: every entry is below eps");
    }
    RandomState rng(options.seed);
    while (out.steps.size() < options.depth && count_positive(current) >= 2) {
        auto result = step(current, algo, &rng);
        if (auto* stop = std::get_if<StepStop>(&result)) {
            out.stopped_early = *stop == StepStop::NotApplicable;
            break;
        }
        auto& outcome = std::get<StepOutcome<double>>(result);
        out.steps.push_back(
            FloatStep{outcome.rule, outcome.matrix, substitution_from_matrix(outcome.matrix, current)});
        current = clamp(outcome.successor);
    }
    out.residual = current;

    Word w{seed_letter(current)};
    for (auto it = out.steps.rbegin(); it != out.steps.rend(); ++it) {
        w = apply_prefix(it->substitution, w, options.max_prefix);
    }
    out.prefix = std::move(w);
    return out;
}

}  // namespace mcf
