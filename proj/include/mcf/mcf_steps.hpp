#pragma once

#include "mcf/lattice.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace mcf {

/// Elementary rules. Fusions are expressed through Algorithm, not here.
enum class Rule {
    Brun,
    BrunMultiplicative,
    Selmer,
    FullySubtractive,
    FullySubtractiveAsPossible,
    Poincare,
    JacobiPerron,
    JacobiPerronRotation,  // permutation step repairing a zero first coordinate
    ArnouxRauzy,
    RandomReduction,
};

std::string_view rule_name(Rule r);

/// One algorithm configuration: a single rule, or Arnoux-Rauzy with a fallback.
class Algorithm {
  public:
    constexpr explicit Algorithm(Rule rule) : rule_(rule) {}

    /// Arnoux-Rauzy whenever its guard holds, otherwise `fallback`.
    /// Throws McfError for fallbacks outside {Brun, BrunMultiplicative,
    /// Selmer, FullySubtractive, Poincare}.
    static Algorithm fusion(Rule fallback);

    [[nodiscard]] constexpr Rule rule() const { return rule_; }
    [[nodiscard]] constexpr const std::optional<Rule>& fallback() const { return fallback_; }
    [[nodiscard]] constexpr bool is_fusion() const { return fallback_.has_value(); }

    /// Command-line slug, e.g. "brun" or "fusion-ar-poincare".
    [[nodiscard]] std::string slug() const;
    /// Human readable name as used in result tables.
    [[nodiscard]] std::string display_name() const;

    friend bool operator==(const Algorithm&, const Algorithm&) = default;

  private:
    Rule rule_;
    std::optional<Rule> fallback_;
};

/// Parses a slug produced by Algorithm::slug(). Throws McfError otherwise.
Algorithm parse_algorithm(std::string_view slug);

/// Every slug-addressable configuration (9 single rules and 5 fusions).
std::vector<Algorithm> all_algorithms();

/// The 13 configurations of the reference discrepancy table, in table order.
std::vector<Algorithm> table_algorithms();

template <typename Scalar>
struct StepOutcome {
    StepMatrix matrix;
    Vector<Scalar> successor;
    Rule rule;
};

enum class StepStop {
    NotApplicable,  // the rule's guard fails
    Terminal,       // at most one nonzero coordinate remains
};

template <typename Scalar>
using StepResult = std::variant<StepOutcome<Scalar>, StepStop>;

/// Random source threaded explicitly through random reductions.
using RandomState = std::mt19937_64;

// ---------------------------------------------------------------------------
// Implementation details shared by the rules
// ---------------------------------------------------------------------------

namespace detail {

template <typename Scalar>
void require_nonzero(const Vector<Scalar>& v) {
    if (v.size() < 2) {
        throw DimensionMismatch("vector dimension must be >= 2");
    }
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] < Scalar(0)) {
            throw McfError("vector entries must be nonnegative");
        }
    }
    if ((v.array() == Scalar(0)).all()) {
        throw ZeroVector("continued fraction step on the zero vector");
    }
}

template <typename Scalar>
bool is_terminal(const Vector<Scalar>& v) {
    return count_positive(v) <= 1;
}

/// floor(a / b) for b > 0, as an exact integer multiplier.
template <typename Scalar>
Integer floor_quotient(Scalar a, Scalar b) {
    if constexpr (std::is_integral_v<Scalar>) {
        return a / b;
    } else {
        return static_cast<Integer>(std::floor(a / b));
    }
}

/// Coordinate of the smallest positive entry, lowest index among ties,
/// skipping `exclude` when given.
template <typename Scalar>
std::optional<Eigen::Index> smallest_positive(const Vector<Scalar>& v,
                                              std::optional<Eigen::Index> exclude = std::nullopt) {
    std::optional<Eigen::Index> best;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] <= Scalar(0) || i == exclude) {
            continue;
        }
        if (!best || v[i] < v[*best]) {
            best = i;
        }
    }
    return best;
}

inline StepMatrix identity(Eigen::Index d) { return StepMatrix::Identity(d, d); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-rule steps. Every successful outcome satisfies v = matrix * successor.
// ---------------------------------------------------------------------------

/// Subtract the second largest entry from the largest.
template <typename Scalar>
StepResult<Scalar> step_brun(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const auto order = argsort_with_ties(v);
    const Eigen::Index largest = order[0];
    const Eigen::Index second = order[1];
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::Brun};
    out.successor[largest] -= v[second];
    out.matrix(largest, second) += 1;
    return out;
}

/// Subtract the largest multiple of the second largest entry from the largest.
template <typename Scalar>
StepResult<Scalar> step_brun_mult(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const auto order = argsort_with_ties(v);
    const Eigen::Index largest = order[0];
    const Eigen::Index second = order[1];
    const Integer q = detail::floor_quotient(v[largest], v[second]);
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::BrunMultiplicative};
    out.successor[largest] -= static_cast<Scalar>(q) * v[second];
    out.matrix(largest, second) += q;
    return out;
}

/// Subtract the smallest positive entry from the largest. Source and target
/// are always distinct coordinates: when the largest coordinate is also the
/// smallest positive one, the next smallest positive coordinate is the source.
template <typename Scalar>
StepResult<Scalar> step_selmer(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const Eigen::Index largest = argsort_with_ties(v)[0];
    const Eigen::Index source = *detail::smallest_positive(v, largest);
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::Selmer};
    out.successor[largest] -= v[source];
    out.matrix(largest, source) += 1;
    return out;
}

/// Subtract the smallest positive entry from every other positive entry.
template <typename Scalar>
StepResult<Scalar> step_fully(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const Eigen::Index s = *detail::smallest_positive(v);
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::FullySubtractive};
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        if (j != s && v[j] > Scalar(0) && v[j] >= v[s]) {
            out.successor[j] -= v[s];
            out.matrix(j, s) += 1;
        }
    }
    return out;
}

/// Fully subtractive step, accepted only when every coordinate strictly above
/// the smallest positive entry stays positive; otherwise a Brun step. The
/// outcome's rule records which of the two was applied.
template <typename Scalar>
StepResult<Scalar> step_fully_as_possible(const Vector<Scalar>& v) {
    auto fully = step_fully(v);
    if (auto* out = std::get_if<StepOutcome<Scalar>>(&fully)) {
        const Eigen::Index s = *detail::smallest_positive(v);
        bool keeps_positive = true;
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            if (v[j] > v[s] && out->successor[j] <= Scalar(0)) {
                keeps_positive = false;
            }
        }
        if (!keeps_positive) {
            return step_brun(v);
        }
    }
    return fully;
}

/// Sorted s1 >= s2 >= ... >= sd: each entry loses the next smaller one.
template <typename Scalar>
StepResult<Scalar> step_poincare(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const auto order = argsort_with_ties(v);
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::Poincare};
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        out.successor[order[k]] = v[order[k]] - v[order[k + 1]];
        for (std::size_t l = k + 1; l < order.size(); ++l) {
            out.matrix(order[k], order[l]) = 1;
        }
    }
    return out;
}

/// (u1,u2,u3) -> (u2 - [u2/u1] u1, u3 - [u3/u1] u1, u1). Requires d = 3 and
/// u1 > 0; a zero first coordinate yields NotApplicable so the caller can
/// insert jacobi_perron_rotation.
template <typename Scalar>
StepResult<Scalar> step_jacobi_perron(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (v.size() != 3) {
        throw DimensionMismatch("Jacobi-Perron is defined for d = 3 only");
    }
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    if (v[0] <= Scalar(0)) {
        return StepStop::NotApplicable;
    }
    const Integer q1 = detail::floor_quotient(v[1], v[0]);
    const Integer q2 = detail::floor_quotient(v[2], v[0]);
    Vector<Scalar> succ(3);
    succ << v[1] - static_cast<Scalar>(q1) * v[0], v[2] - static_cast<Scalar>(q2) * v[0], v[0];
    StepMatrix m = StepMatrix::Zero(3, 3);
    m(1, 0) = 1;
    m(2, 1) = 1;
    m(0, 2) = 1;
    m(1, 2) = q1;
    m(2, 2) = q2;
    return StepOutcome<Scalar>{std::move(m), std::move(succ), Rule::JacobiPerron};
}

/// Cyclic left rotation bringing the first positive entry into coordinate 1.
/// The matrix is the permutation P with P * successor = v.
template <typename Scalar>
StepResult<Scalar> jacobi_perron_rotation(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const Eigen::Index d = v.size();
    Eigen::Index shift = 0;
    while (v[shift] <= Scalar(0)) {
        ++shift;
    }
    if (shift == 0) {
        return StepStop::NotApplicable;
    }
    StepOutcome<Scalar> out{StepMatrix::Zero(d, d), Vector<Scalar>(d), Rule::JacobiPerronRotation};
    for (Eigen::Index i = 0; i < d; ++i) {
        const Eigen::Index from = (i + shift) % d;
        out.successor[i] = v[from];
        out.matrix(from, i) = 1;
    }
    return out;
}

/// Arnoux-Rauzy guard: at least two positive entries and the largest is at
/// least the sum of the others.
template <typename Scalar>
bool arnoux_rauzy_applies(const Vector<Scalar>& v) {
    if (count_positive(v) < 2) {
        return false;
    }
    const Eigen::Index largest = argsort_with_ties(v)[0];
    return v[largest] >= v.sum() - v[largest];
}

/// Subtract all other entries from the largest; NotApplicable when the
/// largest is smaller than their sum.
template <typename Scalar>
StepResult<Scalar> step_arnoux_rauzy(const Vector<Scalar>& v) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    if (!arnoux_rauzy_applies(v)) {
        return StepStop::NotApplicable;
    }
    const Eigen::Index largest = argsort_with_ties(v)[0];
    StepOutcome<Scalar> out{detail::identity(v.size()), v, Rule::ArnouxRauzy};
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        if (j != largest) {
            out.successor[largest] -= v[j];
            out.matrix(largest, j) += 1;
        }
    }
    return out;
}

/// Uniform choice among Brun, Selmer, Fully subtractive, Poincare and, when
/// its guard holds, Arnoux-Rauzy. Draws exactly one value from `rng` per
/// non-terminal call.
template <typename Scalar>
StepResult<Scalar> step_random(const Vector<Scalar>& v, RandomState& rng) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    const bool ar = arnoux_rauzy_applies(v);
    const std::uint64_t choices = ar ? 5 : 4;
    // Plain modulo keeps the draw identical across standard libraries.
    switch (rng() % choices) {
        case 0: return step_brun(v);
        case 1: return step_selmer(v);
        case 2: return step_fully(v);
        case 3: return step_poincare(v);
        default: return step_arnoux_rauzy(v);
    }
}

/// Dispatches one step of a single rule. RandomReduction requires `rng`.
template <typename Scalar>
StepResult<Scalar> step_rule(const Vector<Scalar>& v, Rule rule, RandomState* rng = nullptr) {
    switch (rule) {
        case Rule::Brun: return step_brun(v);
        case Rule::BrunMultiplicative: return step_brun_mult(v);
        case Rule::Selmer: return step_selmer(v);
        case Rule::FullySubtractive: return step_fully(v);
        case Rule::FullySubtractiveAsPossible: return step_fully_as_possible(v);
        case Rule::Poincare: return step_poincare(v);
        case Rule::JacobiPerron: return step_jacobi_perron(v);
        case Rule::JacobiPerronRotation: return jacobi_perron_rotation(v);
        case Rule::ArnouxRauzy: return step_arnoux_rauzy(v);
        case Rule::RandomReduction:
            if (rng == nullptr) {
                throw McfError("random reduction needs a random state");
            }
            return step_random(v, *rng);
    }
    throw McfError("unknown rule");
}

/// Arnoux-Rauzy when its guard holds, otherwise the fallback rule.
template <typename Scalar>
StepResult<Scalar> step_fusion(const Vector<Scalar>& v, Rule fallback) {
    detail::require_nonzero(v);
    if (detail::is_terminal(v)) {
        return StepStop::Terminal;
    }
    if (arnoux_rauzy_applies(v)) {
        return step_arnoux_rauzy(v);
    }
    return step_rule(v, fallback);
}

/// One step of a full algorithm configuration. Jacobi-Perron repairs a zero
/// first coordinate with a rotation step; only pure Arnoux-Rauzy can return
/// NotApplicable.
template <typename Scalar>
StepResult<Scalar> step(const Vector<Scalar>& v, const Algorithm& algo, RandomState* rng = nullptr) {
    if (algo.is_fusion()) {
        return step_fusion(v, *algo.fallback());
    }
    if (algo.rule() == Rule::JacobiPerron) {
        auto result = step_jacobi_perron(v);
        if (std::holds_alternative<StepStop>(result) && std::get<StepStop>(result) == StepStop::NotApplicable) {
            return jacobi_perron_rotation(v);
        }
        return result;
    }
    return step_rule(v, algo.rule(), rng);
}

// ---------------------------------------------------------------------------
// Full expansion of an integer vector
// ---------------------------------------------------------------------------

enum class ExpansionStatus { Completed, StoppedEarly };

struct ExpansionTrace {
    IntVector input;
    std::vector<StepOutcome<Integer>> steps;
    IntVector terminal;
    /// Index of the single nonzero terminal coordinate; set iff Completed.
    std::optional<Letter> terminal_letter;
    ExpansionStatus status = ExpansionStatus::Completed;

    [[nodiscard]] bool completed() const { return status == ExpansionStatus::Completed; }

    /// Vector entering step k (0-based), i.e. f_k in the factorization.
    [[nodiscard]] const IntVector& vector_before(std::size_t k) const {
        return k == 0 ? input : steps[k - 1].successor;
    }
};

/// Applies `algo` until a single nonzero coordinate remains (Completed) or
/// the Arnoux-Rauzy guard fails (StoppedEarly). `seed` drives random reduction.
ExpansionTrace expand(const IntVector& v, const Algorithm& algo, std::uint64_t seed = 0);

/// Product M1 * M2 * ... * Mn of the trace's step matrices.
StepMatrix matrix_product(const ExpansionTrace& trace);

/// Deterministic random state for a seed and an input vector.
RandomState make_random_state(std::uint64_t seed, const IntVector& v);

}  // namespace mcf
