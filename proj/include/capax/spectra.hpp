#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "capax/matrix.hpp"
#include "capax/rational.hpp"

namespace capax {

namespace detail {

inline void check_finite(const SymMatrix& m) {
    for (double v : m.triangle())
        if (!std::isfinite(v)) throw std::invalid_argument("matrix has non-finite entries");
}

}  // namespace detail

// All eigenvalues of a dense symmetric matrix, descending. Cyclic Jacobi
// rotations until the off-diagonal Frobenius norm drops below 1e-12 * ||M||_F.
inline std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol = 1e-9) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    detail::check_finite(m);
    const int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    double norm2 = 0;
    for (double v : a) norm2 += v * v;
    const double target = 1e-12 * std::sqrt(norm2);

    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a[i * n + j] * a[i * n + j];
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

inline double lambda_max(const SymMatrix& m, double tol = 1e-9) {
    if (m.dim() == 0) throw std::invalid_argument("empty matrix");
    return sym_eigenvalues(m, tol).front();
}

inline double lambda_min(const SymMatrix& m, double tol = 1e-9) {
    if (m.dim() == 0) throw std::invalid_argument("empty matrix");
    return sym_eigenvalues(m, tol).back();
}

inline bool psd_check(const SymMatrix& m, double tol = 1e-9) {
    if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
    if (m.dim() == 0) return true;
    return lambda_min(m) >= -tol;
}

struct EigenGroup {
    double value = 0;
    int multiplicity = 0;
};

// Groups a descending spectrum into (value, multiplicity) clusters; adjacent
// eigenvalues closer than gap_tol land in the same cluster.
inline std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& descending,
                                                 double gap_tol = 1e-6) {
    std::vector<EigenGroup> groups;
    double last = 0;
    for (double v : descending) {
        if (!groups.empty() && last - v < gap_tol) {
            groups.back().value += v;
            ++groups.back().multiplicity;
        } else {
            groups.push_back({v, 1});
        }
        last = v;
    }
    for (auto& g : groups) g.value /= g.multiplicity;
    return groups;
}

// Outcome of the exact PSD test. On NOT_PSD the witness names either a
// negative diagonal pivot (i == j, in the Schur complement at that step) or a
// 2x2 principal minor {i, j} with negative determinant.
struct PsdCertificate {
    bool is_psd = false;
    std::optional<std::pair<int, int>> witness;
};

// Exact PSD decision by rational LDL^T with diagonal pivoting. A zero pivot is
// legal only if its whole remaining row vanishes; otherwise the matrix is
// indefinite and the offending 2x2 minor is reported.
inline PsdCertificate exact_psd_certify(const RationalSymMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        int pivot = active[0];
        for (int idx : active)
            if (a[idx][idx] > a[pivot][pivot]) pivot = idx;
        const Rational& p = a[pivot][pivot];
        if (p < 0) return {false, std::make_pair(pivot, pivot)};
        if (p == 0) {
            // Max diagonal is zero: a remaining negative diagonal is a direct
            // witness; otherwise any surviving off-diagonal entry sits in a
            // [[0,a],[a,0]] minor, which is indefinite.
            for (int i : active)
                if (a[i][i] < 0) return {false, std::make_pair(i, i)};
            for (int i : active)
                for (int j : active)
                    if (i < j && a[i][j] != 0) return {false, std::make_pair(i, j)};
            return {true, std::nullopt};
        }
        std::vector<int> rest;
        rest.reserve(active.size() - 1);
        for (int idx : active)
            if (idx != pivot) rest.push_back(idx);
        for (std::size_t r = 0; r < rest.size(); ++r) {
            const int i = rest[r];
            if (a[i][pivot] == 0) continue;
            const Rational factor = a[i][pivot] / p;
            for (std::size_t c = r; c < rest.size(); ++c) {
                const int j = rest[c];
                a[i][j] -= factor * a[pivot][j];
                a[j][i] = a[i][j];
            }
        }
        active = std::move(rest);
    }
    return {true, std::nullopt};
}

// Spectral bound -n*lam_min / (d - lam_min) on the Lovasz theta function of a
// d-regular graph on n vertices, tight for edge-transitive graphs.
inline Rational hoffman_bound(int n, int d, const Rational& lam_min) {
    if (Rational(d) == lam_min) throw std::invalid_argument("hoffman bound: d equals lambda_min");
    if (lam_min >= 0) throw std::invalid_argument("hoffman bound requires lambda_min < 0");
    if (Rational(d) < lam_min) throw std::invalid_argument("hoffman bound requires d > lambda_min");
    return Rational(-n) * lam_min / (Rational(d) - lam_min);
}

inline double hoffman_bound(int n, int d, double lam_min) {
    if (d == lam_min) throw std::invalid_argument("hoffman bound: d equals lambda_min");
    if (lam_min >= 0) throw std::invalid_argument("hoffman bound requires lambda_min < 0");
    return -n * lam_min / (d - lam_min);
}

}  // namespace capax
