#pragma once

#include "mcf/lattice.hpp"

#include <cstddef>
#include <vector>

namespace mcf {

class EmptyWord : public McfError {
  public:
    using McfError::McfError;
};

/// How prefixes are paired with expected counts.
enum class PrefixConvention {
    /// |f_i * l - |u_0..u_{l-1}|_i| for prefix lengths l = 1..|w|.
    Length,
    /// |f_i * k - |u_0..u_k|_i| for k = 0..|w|-1, the prefix one letter longer
    /// than the multiplier. Sensitivity checks only.
    LiteralIndex,
};

/// Maximum deviation between expected and actual letter counts over all
/// letters and prefixes, exact. `f` must be nonnegative, sum to one, and
/// cover every letter of `w`. Throws EmptyWord for an empty word.
Rational discrepancy(const Word& w, const FreqVector& f, PrefixConvention convention = PrefixConvention::Length);

/// Largest difference of letter counts between two factors of equal length.
/// Throws EmptyWord.
Integer balance(const Word& w);

/// p(n) = number of distinct factors of length n, for n = 1..n_max.
/// Throws McfError when n_max > |w|.
std::vector<Integer> factor_complexity(const Word& w, std::size_t n_max);

/// Letter counts divided by |w| over {1..d}; d = 0 uses the largest letter.
/// Throws EmptyWord.
FreqVector empirical_frequency(const Word& w, Eigen::Index d = 0);

/// Max-norm distance between the empirical frequency of w and the
/// normalized `direction`.
double frequency_deviation(const Word& w, const Vector<double>& direction);

/// Largest letter index occurring in w (0 for the empty word).
Eigen::Index alphabet_size(const Word& w);

struct MetricReport {
    Rational discrepancy;
    Integer balance = 0;
    /// max over n of p(n) / n.
    Rational max_complexity_ratio;
    FreqVector empirical_freq;
};

/// All metrics of w; `f` defaults to the empirical frequency when empty.
MetricReport measure(const Word& w, const FreqVector& f = {});

/// Decimal rendering with `digits` significant digits, keeping trailing
/// zeros ("0.6000", "1.200", "0.09733").
std::string format_significant(double value, int digits = 4);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace mcf
