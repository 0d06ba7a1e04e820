#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "capax/rational.hpp"

namespace capax {

// Dense symmetric matrix; only the lower triangle is stored, so symmetry is
// exact by construction.
template <typename T>
class SymMatrixT {
public:
    SymMatrixT() = default;

    explicit SymMatrixT(int dim, const T& fill = T(0))
        : dim_(dim), tri_(triangle_size(dim), fill) {
        if (dim < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static SymMatrixT identity(int dim, const T& scale = T(1)) {
        SymMatrixT m(dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, scale);
        return m;
    }

    int dim() const { return dim_; }

    const T& operator()(int i, int j) const { return tri_[index(i, j)]; }

    void set(int i, int j, const T& value) { tri_[index(i, j)] = value; }

    // Row-major lower triangle, the serialized layout.
    const std::vector<T>& triangle() const { return tri_; }
    std::vector<T>& triangle() { return tri_; }

    bool operator==(const SymMatrixT& other) const = default;

    SymMatrixT& operator+=(const SymMatrixT& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < tri_.size(); ++k) tri_[k] += other.tri_[k];
        return *this;
    }

    SymMatrixT& operator-=(const SymMatrixT& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < tri_.size(); ++k) tri_[k] -= other.tri_[k];
        return *this;
    }

    SymMatrixT& operator*=(const T& scale) {
        for (auto& v : tri_) v *= scale;
        return *this;
    }

    friend SymMatrixT operator+(SymMatrixT a, const SymMatrixT& b) { return a += b; }
    friend SymMatrixT operator-(SymMatrixT a, const SymMatrixT& b) { return a -= b; }
    friend SymMatrixT operator*(SymMatrixT a, const T& s) { return a *= s; }

    T trace() const {
        T t(0);
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    static std::size_t triangle_size(int dim) {
        return static_cast<std::size_t>(dim) * (dim + 1) / 2;
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
            throw std::out_of_range("matrix index out of range");
        if (i < j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }

    void check_same_dim(const SymMatrixT& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int dim_ = 0;
    std::vector<T> tri_;
};

using SymMatrix = SymMatrixT<double>;
using RationalSymMatrix = SymMatrixT<Rational>;
using IntSymMatrix = SymMatrixT<BigInt>;

// M*M of a symmetric M is symmetric, so the product fits the same storage.
template <typename T>
SymMatrixT<T> sym_square(const SymMatrixT<T>& m) {
    const int n = m.dim();
    SymMatrixT<T> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            T acc(0);
            for (int k = 0; k < n; ++k) acc += m(i, k) * m(k, j);
            out.set(i, j, acc);
        }
    return out;
}

inline SymMatrix to_double_matrix(const RationalSymMatrix& m) {
    SymMatrix out(m.dim());
    for (std::size_t k = 0; k < m.triangle().size(); ++k)
        out.triangle()[k] = to_double(m.triangle()[k]);
    return out;
}

inline RationalSymMatrix to_rational_matrix(const IntSymMatrix& m) {
    RationalSymMatrix out(m.dim());
    for (std::size_t k = 0; k < m.triangle().size(); ++k)
        out.triangle()[k] = Rational(m.triangle()[k]);
    return out;
}

// JSON layout: {"dim": n, "entries": [row-major lower triangle]}, rational
// entries as "p/q" strings.
inline nlohmann::json to_json(const SymMatrix& m) {
    return {{"dim", m.dim()}, {"entries", m.triangle()}};
}

inline nlohmann::json to_json(const RationalSymMatrix& m) {
    std::vector<std::string> entries;
    entries.reserve(m.triangle().size());
    for (const auto& v : m.triangle()) entries.push_back(to_fraction_string(v));
    return {{"dim", m.dim()}, {"entries", entries}};
}

inline SymMatrix sym_matrix_from_json(const nlohmann::json& j) {
    SymMatrix m(j.at("dim").get<int>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.triangle().size())
        throw std::invalid_argument("matrix entry count does not match dim");
    for (std::size_t k = 0; k < m.triangle().size(); ++k) {
        const auto& e = entries[k];
        m.triangle()[k] = e.is_string() ? to_double(parse_fraction(e.get<std::string>()))
                                        : e.get<double>();
    }
    return m;
}

inline RationalSymMatrix rational_sym_matrix_from_json(const nlohmann::json& j) {
    RationalSymMatrix m(j.at("dim").get<int>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.triangle().size())
        throw std::invalid_argument("matrix entry count does not match dim");
    for (std::size_t k = 0; k < m.triangle().size(); ++k) {
        const auto& e = entries[k];
        m.triangle()[k] = e.is_string() ? parse_fraction(e.get<std::string>())
                                        : Rational(e.get<long long>());
    }
    return m;
}

}  // namespace capax
