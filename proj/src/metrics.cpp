#include "mcf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_set>

namespace mcf {

namespace {

void require_nonempty(const Word& w, const char* what) {
    if (w.empty()) {
        throw EmptyWord(std::string(what) + ": empty word");
    }
}

}  // namespace

Eigen::Index alphabet_size(const Word& w) {
    int largest = 0;
    for (Letter a : w) {
        largest = std::max(largest, a.index);
    }
    return largest;
}

Rational discrepancy(const Word& w, const FreqVector& f, PrefixConvention convention) {
    require_nonempty(w, "discrepancy");
    const auto d = static_cast<Eigen::Index>(f.size());
    validate_word(w, d);
    Rational total(0);
    Integer common = 1;
    for (const Rational& fi : f) {
        if (fi < Rational(0)) {
            throw McfError("discrepancy: negative frequency");
        }
        total += fi;
        common = std::lcm(common, fi.denominator());
    }
    if (total != Rational(1)) {
        throw McfError("discrepancy: frequencies sum to " + to_string(total) + ", expected 1");
    }

    // Scaled by `common`, every expected count f_i * l is the integer scaled[i] * l.
    std::vector<Integer> scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        scaled[i] = f[i].numerator() * (common / f[i].denominator());
    }
    std::vector<Integer> counts(f.size(), 0);
    Integer worst = 0;
    const Integer shift = convention == PrefixConvention::Length ? 0 : 1;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        ++counts[static_cast<std::size_t>(w[pos].coord())];
        const auto multiplier = static_cast<Integer>(pos + 1) - shift;
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst = std::max(worst, std::abs(scaled[i] * multiplier - counts[i] * common));
        }
    }
    return Rational(worst, common);
}

Integer balance(const Word& w) {
    require_nonempty(w, "balance");
    const Eigen::Index d = alphabet_size(w);
    const std::size_t n = w.size();
    Integer worst = 0;
    std::vector<Integer> counts(static_cast<std::size_t>(d));
    std::vector<Integer> lo(counts.size());
    std::vector<Integer> hi(counts.size());
    for (std::size_t len = 1; len < n; ++len) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t p = 0; p < len; ++p) {
            ++counts[static_cast<std::size_t>(w[p].coord())];
        }
        lo = counts;
        hi = counts;
        for (std::size_t start = 1; start + len <= n; ++start) {
            --counts[static_cast<std::size_t>(w[start - 1].coord())];
            ++counts[static_cast<std::size_t>(w[start + len - 1].coord())];
            for (std::size_t i = 0; i < counts.size(); ++i) {
                lo[i] = std::min(lo[i], counts[i]);
                hi[i] = std::max(hi[i], counts[i]);
            }
        }
        for (std::size_t i = 0; i < counts.size(); ++i) {
            worst = std::max(worst, hi[i] - lo[i]);
        }
    }
    return worst;
}

std::vector<Integer> factor_complexity(const Word& w, std::size_t n_max) {
    if (n_max > w.size()) {
        throw McfError("factor_complexity: n_max " + std::to_string(n_max) + " exceeds word length " +
                       std::to_string(w.size()));
    }
    std::string text;
    text.reserve(w.size());
    for (Letter a : w) {
        text += static_cast<char>(a.index);
    }
    const std::string_view view(text);
    std::vector<Integer> p;
    p.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string_view> factors;
        for (std::size_t start = 0; start + n <= view.size(); ++start) {
            factors.insert(view.substr(start, n));
        }
        p.push_back(static_cast<Integer>(factors.size()));
    }
    return p;
}

FreqVector empirical_frequency(const Word& w, Eigen::Index d) {
    require_nonempty(w, "empirical_frequency");
    if (d == 0) {
        d = alphabet_size(w);
    }
    return normalize(parikh(w, d));
}

double frequency_deviation(const Word& w, const Vector<double>& direction) {
    require_nonempty(w, "frequency_deviation");
    const ParikhVector counts = parikh(w, direction.size());
    const double total = direction.sum();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < direction.size(); ++i) {
        const double expected = direction[i] / total;
        const double actual = static_cast<double>(counts[i]) / static_cast<double>(w.size());
        worst = std::max(worst, std::abs(expected - actual));
    }
    return worst;
}

MetricReport measure(const Word& w, const FreqVector& f) {
    MetricReport report;
    report.empirical_freq = empirical_frequency(w);
    report.discrepancy = discrepancy(w, f.empty() ? report.empirical_freq : f);
    report.balance = balance(w);
    const auto p = factor_complexity(w, w.size());
    report.max_complexity_ratio = Rational(0);
    for (std::size_t n = 1; n <= p.size(); ++n) {
        report.max_complexity_ratio = std::max(report.max_complexity_ratio, Rational(p[n - 1], static_cast<Integer>(n)));
    }
    return report;
}

std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.*g", digits, value);
    return buf;
}

}  // namespace mcf
