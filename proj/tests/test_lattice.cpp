#include "mcf/lattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mcf;

namespace {

std::vector<int> one_based(const std::vector<Eigen::Index>& order) {
    std::vector<int> out;
    for (auto i : order) {
        out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

StepMatrix elementary(Eigen::Index d, Eigen::Index row, Eigen::Index col) {
    StepMatrix m = StepMatrix::Identity(d, d);
    m(row - 1, col - 1) += 1;
    return m;
}

}  // namespace

TEST(Parikh, EmptyWordIsZero) {
    EXPECT_EQ(parikh(Word{}, 3), make_vector({0, 0, 0}));
}

TEST(Parikh, CountsLetters) {
    EXPECT_EQ(parikh(parse_word("3121121"), 3), make_vector({4, 2, 1}));
    EXPECT_EQ(parikh(parse_word("123"), 3), make_vector({1, 1, 1}));
}

TEST(Parikh, RejectsLettersOutsideAlphabet) {
    EXPECT_THROW(parikh(parse_word("124"), 3), InvalidLetter);
    EXPECT_THROW(parse_word("10"), InvalidLetter);
}

TEST(Parikh, ConcatenationIsAdditive) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Word a = oracle::random_word(rng, 40, 3);
        const Word b = oracle::random_word(rng, 40, 3);
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        EXPECT_EQ(parikh(ab, 3), parikh(a, 3) + parikh(b, 3));
        const auto brute = oracle::letter_counts(ab, 3);
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(parikh(ab, 3)[i], brute[static_cast<std::size_t>(i)]);
        }
    }
}

TEST(MatVec, Examples) {
    EXPECT_EQ(mat_vec(StepMatrix::Identity(3, 3), make_vector({1, 2, 3})), make_vector({1, 2, 3}));
    EXPECT_EQ(mat_vec(elementary(3, 3, 2), make_vector({1, 2, 2})), make_vector({1, 2, 4}));
    StepMatrix rows(3, 3);
    rows << 1, 0, 0, 0, 0, 1, 1, 1, 1;
    EXPECT_EQ(mat_vec(rows, make_vector({1, 1, 1})), make_vector({1, 1, 3}));
}

TEST(MatVec, DimensionMismatch) {
    EXPECT_THROW(mat_vec(StepMatrix::Identity(3, 3), make_vector({1, 2})), DimensionMismatch);
    EXPECT_THROW(mat_mul(StepMatrix::Identity(3, 3), StepMatrix::Identity(2, 2)), DimensionMismatch);
}

TEST(MatVec, OverflowIsReported) {
    StepMatrix m = StepMatrix::Identity(2, 2);
    m(0, 1) = std::numeric_limits<Integer>::max();
    EXPECT_THROW(mat_vec(m, make_vector({1, 2})), ArithmeticOverflow);
}

TEST(MatVec, ProductIsAssociativeWithApplication) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 4);
        StepMatrix a(d, d);
        StepMatrix b(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                a(r, c) = static_cast<Integer>(rng() % 7);
                b(r, c) = static_cast<Integer>(rng() % 7);
            }
        }
        const IntVector v = oracle::random_vector(rng, d, 50);
        EXPECT_EQ(mat_vec(mat_mul(a, b), v), mat_vec(a, mat_vec(b, v)));
    }
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(StepMatrix::Identity(3, 3)), 1);
    StepMatrix p(3, 3);
    p << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    EXPECT_EQ(determinant(p), -1);
    StepMatrix m(3, 3);
    m << 2, 0, 1, 1, 3, 2, 1, 1, 2;
    EXPECT_EQ(determinant(m), 6);  // 2(6-2) - 0 + 1(1-3)
    StepMatrix singular(2, 2);
    singular << 1, 2, 2, 4;
    EXPECT_EQ(determinant(singular), 0);
}

TEST(ArgsortWithTies, Examples) {
    EXPECT_EQ(one_based(argsort_with_ties<Integer>(make_vector({1, 2, 4}))), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(one_based(argsort_with_ties<Integer>(make_vector({2, 2, 1}))), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(one_based(argsort_with_ties<Integer>(make_vector({5, 5, 5}))), (std::vector<int>{1, 2, 3}));
}

TEST(ArgsortWithTies, ZeroVectorRejected) {
    EXPECT_THROW(argsort_with_ties<Integer>(make_vector({0, 0, 0})), ZeroVector);
}

TEST(ArgsortWithTies, IsSortedPermutation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 5);
        const IntVector v = oracle::random_vector(rng, d, 4);
        const auto order = argsort_with_ties<Integer>(v);
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (Eigen::Index i = 0; i < d; ++i) {
            ASSERT_EQ(sorted[static_cast<std::size_t>(i)], i);
        }
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            ASSERT_GE(v[order[k]], v[order[k + 1]]);
            if (v[order[k]] == v[order[k + 1]]) {
                ASSERT_LT(order[k], order[k + 1]);
            }
        }
    }
}

TEST(ParseVector, AcceptsAndRejects) {
    EXPECT_EQ(parse_vector("1,2,4"), make_vector({1, 2, 4}));
    EXPECT_EQ(parse_vector("0,7"), make_vector({0, 7}));
    EXPECT_THROW(parse_vector("1,,2"), McfError);
    EXPECT_THROW(parse_vector("1,-2,3"), McfError);
    EXPECT_THROW(parse_vector("5"), McfError);
    EXPECT_THROW(parse_vector("a,b,c"), McfError);
}

TEST(Normalize, ExactFrequencies) {
    const FreqVector f = normalize(make_vector({2, 3, 5}));
    EXPECT_EQ(f[0], Rational(1, 5));
    EXPECT_EQ(f[1], Rational(3, 10));
    EXPECT_EQ(f[2], Rational(1, 2));
    EXPECT_THROW(normalize(make_vector({0, 0})), ZeroVector);
}

TEST(Gcd, OfEntries) {
    EXPECT_EQ(gcd_of(make_vector({4, 6, 10})), 2);
    EXPECT_EQ(gcd_of(make_vector({0, 0, 5})), 5);
    EXPECT_EQ(gcd_of(make_vector({0, 0, 0})), 0);
}
