#include "mcf/lattice.hpp"

#include <charconv>
#include <sstream>

namespace mcf {

namespace {

Integer checked_add(Integer a, Integer b) {
    Integer r{};
    if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticOverflow("integer overflow in addition");
    }
    return r;
}

Integer checked_mul(Integer a, Integer b) {
    Integer r{};
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticOverflow("integer overflow in multiplication");
    }
    return r;
}

}  // namespace

IntVector make_vector(std::initializer_list<Integer> entries) {
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (Integer e : entries) {
        v[i++] = e;
    }
    return v;
}

IntVector parse_vector(std::string_view text) {
    std::vector<Integer> entries;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Integer value{};
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw McfError("malformed vector '" + std::string(text) + "': expected a,b,c");
        }
        if (value < 0) {
            throw McfError("malformed vector '" + std::string(text) + "': entries must be >= 0");
        }
        entries.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (entries.size() < 2) {
        throw McfError("malformed vector '" + std::string(text) + "': dimension must be >= 2");
    }
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = entries[i];
    }
    return v;
}

std::string to_string(const IntVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string to_string(const StepMatrix& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r > 0) {
            out += "; ";
        }
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += std::to_string(m(r, c));
        }
    }
    return out + "]";
}

Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char ch : text) {
        if (ch < '1' || ch > '9') {
            throw InvalidLetter(std::string("invalid letter '") + ch + "' in word");
        }
        w.emplace_back(ch - '0');
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
        if (a.index < 1 || a.index > 9) {
            throw InvalidLetter("letter " + std::to_string(a.index) + " has no digit rendering");
        }
        out += static_cast<char>('0' + a.index);
    }
    return out;
}

void validate_word(const Word& w, Eigen::Index d) {
    for (Letter a : w) {
        if (a.index < 1 || a.index > d) {
            throw InvalidLetter("letter " + std::to_string(a.index) + " outside 1.." + std::to_string(d));
        }
    }
}

ParikhVector parikh(const Word& w, Eigen::Index d) {
    validate_word(w, d);
    ParikhVector counts = ParikhVector::Zero(d);
    for (Letter a : w) {
        ++counts[a.coord()];
    }
    return counts;
}

IntVector mat_vec(const StepMatrix& m, const IntVector& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("mat_vec: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " matrix times vector of size " + std::to_string(v.size()));
    }
    IntVector out = IntVector::Zero(m.rows());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Integer acc = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            acc = checked_add(acc, checked_mul(m(r, c), v[c]));
        }
        out[r] = acc;
    }
    return out;
}

StepMatrix mat_mul(const StepMatrix& a, const StepMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
    }
    StepMatrix out = StepMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            Integer acc = 0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                acc = checked_add(acc, checked_mul(a(r, k), b(k, c)));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Integer determinant(const StepMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("determinant of a non-square matrix");
    }
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return 1;
    }
    // Bareiss elimination keeps every intermediate entry an exact minor.
    StepMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                const Integer num = checked_add(checked_mul(a(i, j), a(k, k)), -checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        g = std::gcd(g, v[i]);
    }
    return g;
}

FreqVector normalize(const IntVector& v) {
    const Integer total = v.sum();
    if (total <= 0) {
        throw ZeroVector("normalize: zero vector");
    }
    FreqVector f;
    f.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        f.emplace_back(v[i], total);
    }
    return f;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mcf
