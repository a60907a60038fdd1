#pragma once

#include "mcf/lattice.hpp"

#include <string>
#include <vector>

namespace mcf {

/// Non-erasing substitution over {1..d}: letter j maps to images()[j-1].
class Substitution {
  public:
    /// Throws McfError if an image is empty or uses a letter outside 1..d.
    explicit Substitution(std::vector<Word> images);

    static Substitution identity(Eigen::Index d);

    [[nodiscard]] Eigen::Index dimension() const { return static_cast<Eigen::Index>(images_.size()); }
    [[nodiscard]] const Word& image(Letter a) const { return images_.at(static_cast<std::size_t>(a.coord())); }
    [[nodiscard]] const std::vector<Word>& images() const { return images_; }

    /// Renders as "1->13, 2->2, 3->3".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

  private:
    std::vector<Word> images_;
};

/// M[i][j] = number of occurrences of letter i+1 in the image of letter j+1.
StepMatrix incidence(const Substitution& s);

/// Realizes M under the "most frequent letter first" convention: the image
/// of letter j lists letter i exactly M(i,j) times, letters grouped and sorted
/// by `order_ref` descending (ties by ascending letter).
///
/// `order_ref` is the vector entering the step that produced M. Throws
/// McfError when M has a negative entry or a zero column.
Substitution substitution_from_matrix(const StepMatrix& m, const IntVector& order_ref);

/// Same convention with a floating point reference vector.
Substitution substitution_from_matrix(const StepMatrix& m, const Vector<double>& order_ref);

/// Concatenation of the images of the letters of w.
Word apply(const Substitution& s, const Word& w);

/// Image of w truncated to at most `max_length` letters. Substitutions map
/// prefixes to prefixes, so the result is a prefix of apply(s, w).
Word apply_prefix(const Substitution& s, const Word& w, std::size_t max_length);

/// (s o t)(j) = s(t(j)).
Substitution compose(const Substitution& s, const Substitution& t);

}  // namespace mcf
