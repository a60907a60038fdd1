#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcf {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class McfError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public McfError {
  public:
    using McfError::McfError;
};

class ZeroVector : public McfError {
  public:
    using McfError::McfError;
};

class ArithmeticOverflow : public McfError {
  public:
    using McfError::McfError;
};

class InvalidLetter : public McfError {
  public:
    using McfError::McfError;
};

// ---------------------------------------------------------------------------
// Dense types
// ---------------------------------------------------------------------------

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Nonnegative integer vector; the numerators of a rational direction.
using IntVector = Vector<Integer>;
/// Letter counts of a word, indexed by letter - 1.
using ParikhVector = Vector<Integer>;
/// Nonnegative unimodular matrix produced by one continued fraction step.
using StepMatrix = Matrix<Integer>;
/// Exact letter frequencies; components are nonnegative and sum to one.
using FreqVector = std::vector<Rational>;

/// A letter of the alphabet {1, ..., d}. Stored 1-based, as printed.
struct Letter {
    int index = 1;

    constexpr Letter() = default;
    constexpr explicit Letter(int i) : index(i) {}

    /// Zero-based coordinate of this letter in vectors and matrices.
    [[nodiscard]] constexpr Eigen::Index coord() const { return index - 1; }

    static constexpr Letter from_coord(Eigen::Index c) { return Letter(static_cast<int>(c) + 1); }

    friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

// ---------------------------------------------------------------------------
// Construction and rendering helpers
// ---------------------------------------------------------------------------

IntVector make_vector(std::initializer_list<Integer> entries);

/// Parses "a,b,c" into a vector. Throws McfError on malformed input.
IntVector parse_vector(std::string_view text);

/// Renders as "(a,b,c)".
std::string to_string(const IntVector& v);

/// Renders a matrix row by row: "[1 0 0; 0 1 0; 0 1 1]".
std::string to_string(const StepMatrix& m);

/// Parses a digit string such as "1213121". Letters are single digits 1..9.
Word parse_word(std::string_view text);

/// Digit-string rendering of a word. Requires every letter index <= 9.
std::string to_string(const Word& w);

/// Checks that every letter lies in 1..d.
void validate_word(const Word& w, Eigen::Index d);

// ---------------------------------------------------------------------------
// Exact arithmetic
// ---------------------------------------------------------------------------

/// Letter counts of w over the alphabet {1..d}.
ParikhVector parikh(const Word& w, Eigen::Index d);

/// Exact product M * v; throws DimensionMismatch or ArithmeticOverflow.
IntVector mat_vec(const StepMatrix& m, const IntVector& v);

/// Exact product A * B with the same error contract as mat_vec.
StepMatrix mat_mul(const StepMatrix& a, const StepMatrix& b);

/// Integer determinant by fraction-free elimination (Bareiss).
Integer determinant(const StepMatrix& m);

/// gcd of all entries; 0 for the zero vector.
Integer gcd_of(const IntVector& v);

/// Number of strictly positive entries.
template <typename Scalar>
Eigen::Index count_positive(const Vector<Scalar>& v) {
    return (v.array() > Scalar(0)).count();
}

/// Coordinates ordered by value descending, then index ascending.
///
/// The order is total and deterministic, so "largest" and "second largest"
/// are always well defined: among equal entries the lower index ranks higher.
/// Throws ZeroVector when every entry is zero.
template <typename Scalar>
std::vector<Eigen::Index> argsort_with_ties(const Vector<Scalar>& v) {
    if ((v.array() == Scalar(0)).all()) {
        throw ZeroVector("argsort_with_ties: zero vector");
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(v.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return v[a] > v[b]; });
    return order;
}

/// Exact rational frequencies v / sum(v).
FreqVector normalize(const IntVector& v);

std::string to_string(const Rational& r);

}  // namespace mcf
