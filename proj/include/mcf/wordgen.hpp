#pragma once

#include "mcf/lattice.hpp"
#include "mcf/mcf_steps.hpp"
#include "mcf/substitution.hpp"

#include <cstddef>
#include <vector>

namespace mcf {

class ExpansionIncomplete : public McfError {
  public:
    using McfError::McfError;
};

/// One period of the word attached to a rational direction.
struct GeneratedWord {
    Word word;
    IntVector input;
    ExpansionTrace trace;
    Integer gcd = 1;
};

/// Expands v with `algo` and rebuilds the word
///   w = s1(s2(...sn(terminal_letter)...))
/// where sk realizes the k-th step matrix, ordered by the vector entering
/// step k. parikh(w) * gcd(v) = v holds exactly.
///
/// Throws ZeroVector for v = 0 and ExpansionIncomplete when the expansion
/// stops early (pure Arnoux-Rauzy outside its domain).
GeneratedWord generate_word(const IntVector& v, const Algorithm& algo, std::uint64_t seed = 0);

/// Substitutions s1..sn of a completed or partial trace.
std::vector<Substitution> trace_substitutions(const ExpansionTrace& trace);

struct FloatStep {
    Rule rule;
    StepMatrix matrix;
    Substitution substitution;
};

struct FloatExpansion {
    Vector<double> direction;
    std::vector<FloatStep> steps;
    Word prefix;
    Vector<double> residual;
    /// True when the expansion ended on a failed Arnoux-Rauzy guard.
    bool stopped_early = false;

    [[nodiscard]] std::size_t depth() const { return steps.size(); }
};

struct FloatOptions {
    std::size_t depth = 50;
    double eps = 1e-12;
    std::uint64_t seed = 0;
    /// Prefix length cap; the prefix stays exact, only shorter.
    std::size_t max_prefix = std::size_t{1} << 20;
};

/// Runs the step rules in double precision for at most `options.depth`
/// steps. Entries below eps are treated as zero; the expansion stops once
/// fewer than two entries remain. The prefix is the composed substitutions
/// applied to seed_letter(residual).
///
/// Throws McfError on non-finite or negative input and ZeroVector when every
/// entry is below eps.
FloatExpansion expand_float(const Vector<double>& direction, const Algorithm& algo, const FloatOptions& options = {});

/// Largest residual coordinate, lowest index among ties. Throws ZeroVector.
Letter seed_letter(const Vector<double>& residual);

}  // namespace mcf
