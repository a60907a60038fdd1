#include "mcf/substitution.hpp"

#include <algorithm>
#include <numeric>

namespace mcf {

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
    const auto d = static_cast<Eigen::Index>(images_.size());
    if (d < 1) {
        throw McfError("substitution over an empty alphabet");
    }
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j].empty()) {
            throw McfError("erasing substitution: image of letter " + std::to_string(j + 1) + " is empty");
        }
        validate_word(images_[j], d);
    }
}

Substitution Substitution::identity(Eigen::Index d) {
    std::vector<Word> images;
    for (Eigen::Index j = 0; j < d; ++j) {
        images.push_back(Word{Letter::from_coord(j)});
    }
    return Substitution(std::move(images));
}

std::string Substitution::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (j > 0) {
            out += ", ";
        }
        out += std::to_string(j + 1) + "->" + mcf::to_string(images_[j]);
    }
    return out;
}

StepMatrix incidence(const Substitution& s) {
    const Eigen::Index d = s.dimension();
    StepMatrix m = StepMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        m.col(j) = parikh(s.images()[static_cast<std::size_t>(j)], d);
    }
    return m;
}

namespace {

template <typename Scalar>
Substitution from_matrix(const StepMatrix& m, const Vector<Scalar>& order_ref) {
    const Eigen::Index d = m.rows();
    if (m.cols() != d || order_ref.size() != d) {
        throw DimensionMismatch("substitution_from_matrix: dimensions differ");
    }
    std::vector<Eigen::Index> letters(static_cast<std::size_t>(d));
    std::iota(letters.begin(), letters.end(), Eigen::Index{0});
    std::stable_sort(letters.begin(), letters.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return order_ref[a] > order_ref[b]; });

    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        Word image;
        for (Eigen::Index i : letters) {
            if (m(i, j) < 0) {
                throw McfError("substitution_from_matrix: negative entry");
            }
            image.insert(image.end(), static_cast<std::size_t>(m(i, j)), Letter::from_coord(i));
        }
        if (image.empty()) {
            throw McfError("substitution_from_matrix: column " + std::to_string(j + 1) +
                           " is zero (erasing substitution)");
        }
        images.push_back(std::move(image));
    }
    return Substitution(std::move(images));
}

}  // namespace

Substitution substitution_from_matrix(const StepMatrix& m, const IntVector& order_ref) {
    return from_matrix(m, order_ref);
}

Substitution substitution_from_matrix(const StepMatrix& m, const Vector<double>& order_ref) {
    return from_matrix(m, order_ref);
}

Word apply(const Substitution& s, const Word& w) {
    validate_word(w, s.dimension());
    std::size_t length = 0;
    for (Letter a : w) {
        length += s.image(a).size();
    }
    Word out;
    out.reserve(length);
    for (Letter a : w) {
        const Word& img = s.image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word apply_prefix(const Substitution& s, const Word& w, std::size_t max_length) {
    validate_word(w, s.dimension());
    Word out;
    for (Letter a : w) {
        if (out.size() >= max_length) {
            break;
        }
        const Word& img = s.image(a);
        const std::size_t take = std::min(img.size(), max_length - out.size());
        out.insert(out.end(), img.begin(), img.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

Substitution compose(const Substitution& s, const Substitution& t) {
    if (s.dimension() != t.dimension()) {
        throw DimensionMismatch("compose: alphabets differ");
    }
    std::vector<Word> images;
    images.reserve(t.images().size());
    for (const Word& img : t.images()) {
        images.push_back(mcf::apply(s, img));
    }
    return Substitution(std::move(images));
}

}  // namespace mcf
