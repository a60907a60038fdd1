#include "mcf/metrics.hpp"
#include "mcf/wordgen.hpp"

#include "oracles.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

using namespace mcf;

namespace {

Vector<double> dvec(std::initializer_list<double> xs) {
    Vector<double> v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) {
        v[i++] = x;
    }
    return v;
}

}  // namespace

TEST(GenerateWord, TerminalInput) {
    const auto g = generate_word(make_vector({0, 0, 5}), Algorithm(Rule::Brun));
    EXPECT_EQ(to_string(g.word), "3");
    EXPECT_EQ(g.gcd, 5);
}

TEST(GenerateWord, ArnouxRauzyOutsideDomain) {
    EXPECT_THROW(generate_word(make_vector({1, 1, 1}), Algorithm(Rule::ArnouxRauzy)), ExpansionIncomplete);
    EXPECT_THROW(generate_word(make_vector({0, 0, 0}), Algorithm(Rule::Brun)), ZeroVector);
}

TEST(GenerateWord, FusionExample) {
    const auto g = generate_word(make_vector({2, 3, 5}), Algorithm::fusion(Rule::Poincare));
    EXPECT_EQ(g.word.size(), 10u);
    EXPECT_EQ(parikh(g.word, 3), make_vector({2, 3, 5}));
    EXPECT_EQ(to_string(g.word), "3231323132");
}

TEST(GenerateWord, BrunOnOneTwoFour) {
    // Step 2 sees (1,2,2): the tie puts letter 2 ahead of 3.
    const auto g = generate_word(make_vector({1, 2, 4}), Algorithm(Rule::Brun));
    const auto subs = trace_substitutions(g.trace);
    ASSERT_EQ(subs.size(), 4u);
    EXPECT_EQ(subs[0].to_string(), "1->1, 2->32, 3->3");
    EXPECT_EQ(subs[1].to_string(), "1->1, 2->2, 3->23");
    Word w{Letter(3)};
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        w = mcf::apply(*it, w);
    }
    EXPECT_EQ(w, g.word);
    EXPECT_EQ(parikh(g.word, 3), make_vector({1, 2, 4}));
}

TEST(GenerateWord, ParikhIdentityExhaustive) {
    for (Integer a = 0; a <= 40; ++a) {
        for (Integer b = 0; a + b <= 40; ++b) {
            for (Integer c = 0; a + b + c <= 40; ++c) {
                if (a + b + c == 0) {
                    continue;
                }
                const IntVector v = make_vector({a, b, c});
                for (const auto& algo : all_algorithms()) {
                    if (algo == Algorithm(Rule::ArnouxRauzy) && !expand(v, algo).completed()) {
                        continue;
                    }
                    const auto g = generate_word(v, algo, 5);
                    ASSERT_EQ(g.gcd, oracle::gcd_all(v));
                    ASSERT_EQ(parikh(g.word, 3) * g.gcd, v) << algo.slug() << " " << to_string(v);
                }
            }
        }
    }
}

TEST(GenerateWord, HigherDimension) {
    IntVector v(4);
    v << 2, 3, 5, 7;
    const auto g = generate_word(v, Algorithm(Rule::Selmer));
    EXPECT_EQ(parikh(g.word, 4), v);
}

TEST(ExpandFloat, TerminalDirection) {
    const auto e = expand_float(dvec({0, 0, 1}), Algorithm(Rule::Brun));
    EXPECT_EQ(e.depth(), 0u);
    EXPECT_EQ(to_string(e.prefix), "3");
}

TEST(ExpandFloat, RejectsBadInput) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(expand_float(dvec({nan, 1, 1}), Algorithm(Rule::Brun)), McfError);
    EXPECT_THROW(expand_float(dvec({-1, 1, 1}), Algorithm(Rule::Brun)), McfError);
    EXPECT_THROW(expand_float(dvec({0, 1e-15, 0}), Algorithm(Rule::Brun)), ZeroVector);
}

TEST(ExpandFloat, TribonacciArnouxRauzy) {
    // t^3 = t^2 + t + 1, so the AR guard holds forever on (1, t, t^2).
    const double t = 1.8392867552141612;
    const Vector<double> dir = dvec({1, t, t * t});
    double previous = 1.0;
    for (std::size_t depth : {4u, 8u, 12u, 16u, 20u}) {
        FloatOptions opt;
        opt.depth = depth;
        const auto e = expand_float(dir, Algorithm(Rule::ArnouxRauzy), opt);
        ASSERT_EQ(e.depth(), depth);
        EXPECT_FALSE(e.stopped_early);
        const double err = frequency_deviation(e.prefix, dir);
        EXPECT_LT(err, previous) << "depth " << depth;
        previous = err;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(ExpandFloat, StopsEarlyOutsideArnouxRauzyDomain) {
    const auto e = expand_float(dvec({1, 1, 1}), Algorithm(Rule::ArnouxRauzy));
    EXPECT_TRUE(e.stopped_early);
    EXPECT_EQ(e.depth(), 0u);
    EXPECT_EQ(to_string(e.prefix), "1");
}

TEST(ExpandFloat, DyadicInputMatchesIntegerExpansion) {
    const IntVector v = make_vector({3, 5, 8});
    const Vector<double> dir = dvec({3.0 / 16, 5.0 / 16, 8.0 / 16});
    for (const auto& algo : all_algorithms()) {
        if (algo == Algorithm(Rule::RandomReduction)) {
            continue;
        }
        const auto e = expand_float(dir, algo);
        const auto g = generate_word(v, algo);
        ASSERT_EQ(e.depth(), g.trace.steps.size()) << algo.slug();
        for (std::size_t k = 0; k < e.depth(); ++k) {
            EXPECT_EQ(e.steps[k].matrix, g.trace.steps[k].matrix) << algo.slug() << " step " << k;
        }
        EXPECT_EQ(e.prefix, g.word) << algo.slug();
    }
}

TEST(ExpandFloat, PrefixCap) {
    const double t = 1.8392867552141612;
    FloatOptions opt;
    opt.depth = 30;
    opt.max_prefix = 100;
    const auto e = expand_float(dvec({1, t, t * t}), Algorithm(Rule::ArnouxRauzy), opt);
    EXPECT_EQ(e.prefix.size(), 100u);
    opt.max_prefix = std::size_t{1} << 20;
    const auto full = expand_float(dvec({1, t, t * t}), Algorithm(Rule::ArnouxRauzy), opt);
    EXPECT_TRUE(std::equal(e.prefix.begin(), e.prefix.end(), full.prefix.begin()));
}

TEST(SeedLetter, Examples) {
    EXPECT_EQ(seed_letter(dvec({0.1, 0.5, 0.2})), Letter(2));
    EXPECT_EQ(seed_letter(dvec({0.3, 0.3, 0.1})), Letter(1));
    EXPECT_THROW(seed_letter(dvec({0, 0, 0})), ZeroVector);
}
