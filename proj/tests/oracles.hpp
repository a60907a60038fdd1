#pragma once

// Reference implementations and generators for tests. Nothing here calls the
// optimized code paths it is compared against.

#include "mcf/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace mcf::oracle {

/// Counts letter `a` in w[0, len) by direct scanning.
inline Integer count_in(const Word& w, std::size_t begin, std::size_t len, int a) {
    return std::count_if(w.begin() + static_cast<std::ptrdiff_t>(begin),
                         w.begin() + static_cast<std::ptrdiff_t>(begin + len),
                         [a](Letter x) { return x.index == a; });
}

inline std::vector<Integer> letter_counts(const Word& w, int d) {
    std::vector<Integer> c(static_cast<std::size_t>(d), 0);
    for (int a = 1; a <= d; ++a) {
        c[static_cast<std::size_t>(a - 1)] = count_in(w, 0, w.size(), a);
    }
    return c;
}

/// max over letters and prefix lengths l = 1..|w| of |f_i l - count|,
/// rational arithmetic throughout.
inline Rational discrepancy(const Word& w, const FreqVector& f) {
    Rational worst(0);
    for (std::size_t len = 1; len <= w.size(); ++len) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Rational expected = f[i] * Rational(static_cast<Integer>(len));
            const Rational dev = expected - Rational(count_in(w, 0, len, static_cast<int>(i) + 1));
            worst = std::max(worst, dev < Rational(0) ? -dev : dev);
        }
    }
    return worst;
}

/// Compares every pair of equal-length factors.
inline Integer balance(const Word& w) {
    int d = 0;
    for (Letter a : w) {
        d = std::max(d, a.index);
    }
    const std::size_t n = w.size();
    // prefix[l][a] = |w_0..w_{l-1}|_a by direct counting.
    std::vector<std::vector<Integer>> prefix(n + 1, std::vector<Integer>(static_cast<std::size_t>(d) + 1, 0));
    for (std::size_t l = 0; l <= n; ++l) {
        for (int a = 1; a <= d; ++a) {
            prefix[l][static_cast<std::size_t>(a)] = count_in(w, 0, l, a);
        }
    }
    Integer worst = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t p = 0; p + len <= n; ++p) {
            for (std::size_t q = p + 1; q + len <= n; ++q) {
                for (int a = 1; a <= d; ++a) {
                    const auto ua = static_cast<std::size_t>(a);
                    const Integer cp = prefix[p + len][ua] - prefix[p][ua];
                    const Integer cq = prefix[q + len][ua] - prefix[q][ua];
                    worst = std::max(worst, cp > cq ? cp - cq : cq - cp);
                }
            }
        }
    }
    return worst;
}

inline std::vector<Integer> complexity(const Word& w, std::size_t n_max) {
    std::vector<Integer> p;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::set<std::vector<int>> factors;
        for (std::size_t s = 0; s + n <= w.size(); ++s) {
            std::vector<int> f;
            for (std::size_t k = s; k < s + n; ++k) {
                f.push_back(w[k].index);
            }
            factors.insert(f);
        }
        p.push_back(static_cast<Integer>(factors.size()));
    }
    return p;
}

inline Integer gcd_all(const IntVector& v) {
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Integer a = g;
        Integer b = v[i];
        while (b != 0) {
            const Integer t = a % b;
            a = b;
            b = t;
        }
        g = a;
    }
    return g;
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, int d) {
    const std::size_t len = 1 + rng() % max_len;
    Word w;
    for (std::size_t k = 0; k < len; ++k) {
        w.emplace_back(static_cast<int>(1 + rng() % static_cast<std::uint64_t>(d)));
    }
    return w;
}

inline IntVector random_vector(std::mt19937_64& rng, Eigen::Index d, Integer max_entry) {
    IntVector v(d);
    do {
        for (Eigen::Index i = 0; i < d; ++i) {
            v[i] = static_cast<Integer>(rng() % static_cast<std::uint64_t>(max_entry + 1));
        }
    } while ((v.array() == 0).all());
    return v;
}

/// All d = 3 vectors with entries in 0..max_entry, except zero.
inline std::vector<IntVector> small_vectors(Integer max_entry) {
    std::vector<IntVector> out;
    for (Integer a = 0; a <= max_entry; ++a) {
        for (Integer b = 0; b <= max_entry; ++b) {
            for (Integer c = 0; c <= max_entry; ++c) {
                if (a + b + c > 0) {
                    out.push_back(make_vector({a, b, c}));
                }
            }
        }
    }
    return out;
}

}  // namespace mcf::oracle
