#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "capax/graph.hpp"
#include "capax/matrix.hpp"
#include "capax/spectra.hpp"

namespace capax {

enum class ThetaVariant { Lovasz, Schrijver };

enum class PairConstraint { Free, EqualOne, AtLeastOne };

// Dual lambda_max-minimization program: every zero entry of the adjacency
// matrix (diagonal included) is constrained, edges are free.
struct ThetaProgram {
    Graph graph;
    ThetaVariant variant;

    ThetaProgram(Graph g, ThetaVariant v) : graph(std::move(g)), variant(v) {}

    PairConstraint constraint(int i, int j) const {
        if (i != j && graph.adjacent(i, j)) return PairConstraint::Free;
        return variant == ThetaVariant::Lovasz ? PairConstraint::EqualOne
                                               : PairConstraint::AtLeastOne;
    }
};

enum class SolveStatus { Converged, MaxIter, NumericalFailure };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "CONVERGED";
        case SolveStatus::MaxIter: return "MAX_ITER";
        case SolveStatus::NumericalFailure: return "NUMERICAL_FAILURE";
    }
    return "UNKNOWN";
}

struct IterationRecord {
    int step = 0;
    double objective = 0;
    double min_eig_slack = 0;
};

struct SdpSolution {
    double value = 0;
    SymMatrix optimizer;
    double gap = 0;
    std::vector<IterationRecord> iterations;
    SolveStatus status = SolveStatus::NumericalFailure;
};

// Feasibility report for a proposed dual matrix: its lambda_max (an upper
// bound on the theta function whenever the violation is zero) and the largest
// constraint violation.
inline std::pair<double, double> verify_feasible(const ThetaProgram& program, const SymMatrix& x) {
    const int n = program.graph.vertex_count();
    if (x.dim() != n) throw std::invalid_argument("certificate dimension mismatch");
    double violation = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            switch (program.constraint(i, j)) {
                case PairConstraint::Free: break;
                case PairConstraint::EqualOne:
                    violation = std::max(violation, std::abs(x(i, j) - 1.0));
                    break;
                case PairConstraint::AtLeastOne:
                    violation = std::max(violation, 1.0 - x(i, j));
                    break;
            }
        }
    return {lambda_max(x), std::max(violation, 0.0)};
}

namespace detail {

// Dense lower-triangular Cholesky; returns false if the matrix is not
// (numerically) positive definite.
inline bool cholesky(std::vector<double>& a, int n) {
    for (int j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (int k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0) || !std::isfinite(d)) return false;
        const double l = std::sqrt(d);
        a[j * n + j] = l;
        for (int i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            const double* ri = &a[i * n];
            const double* rj = &a[j * n];
            for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
            a[i * n + j] = s / l;
        }
    }
    return true;
}

inline double cholesky_logdet(const std::vector<double>& l, int n) {
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += std::log(l[i * n + i]);
    return 2 * sum;
}

// Inverse from the Cholesky factor, full symmetric storage.
inline std::vector<double> cholesky_inverse(const std::vector<double>& l, int n) {
    // Invert L in place (lower triangular).
    std::vector<double> li(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        li[i * n + i] = 1.0 / l[i * n + i];
        for (int j = 0; j < i; ++j) {
            double s = 0;
            for (int k = j; k < i; ++k) s += l[i * n + k] * li[k * n + j];
            li[i * n + j] = -s / l[i * n + i];
        }
    }
    // W = L^{-T} L^{-1}.
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double s = 0;
            for (int k = i; k < n; ++k) s += li[k * n + i] * li[k * n + j];
            w[i * n + j] = w[j * n + i] = s;
        }
    return w;
}

// Solves H d = -g with H symmetric positive definite. The system is first
// equilibrated by symmetric diagonal scaling (the slack barrier makes the raw
// diagonal span many orders of magnitude); if Cholesky still fails, a small
// escalating ridge is added.
inline bool solve_spd(const std::vector<double>& h, const std::vector<double>& g,
                      std::vector<double>& d, int n) {
    std::vector<double> scale(n);
    for (int i = 0; i < n; ++i) {
        const double hii = h[i * static_cast<std::size_t>(n) + i];
        if (!(hii > 0) || !std::isfinite(hii)) return false;
        scale[i] = std::sqrt(hii);
    }
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (double ridge = 0;; ridge = ridge == 0 ? 1e-13 : ridge * 100) {
        if (ridge > 1e-5) return false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[i * n + j] = h[i * static_cast<std::size_t>(n) + j] / (scale[i] * scale[j]) +
                               (i == j ? ridge : 0.0);
        if (cholesky(a, n)) break;
    }
    d.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = -g[i] / scale[i];
        for (int k = 0; k < i; ++k) s -= a[i * n + k] * d[k];
        d[i] = s / a[i * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = d[i];
        for (int k = i + 1; k < n; ++k) s -= a[k * n + i] * d[k];
        d[i] = s / a[i * n + i];
    }
    for (int i = 0; i < n; ++i) d[i] /= scale[i];
    return true;
}

class ThetaSolver {
public:
    ThetaSolver(const Graph& g, ThetaVariant variant, double tol)
        : program_(g, variant), n_(g.vertex_count()), tol_(tol) {
        if (n_ > 128) throw std::invalid_argument("theta solver capped at 128 vertices");
        if (n_ < 1) throw std::invalid_argument("theta solver needs a non-empty graph");
        if (tol < 1e-8 || !(tol > 0)) throw std::invalid_argument("theta tolerance must be >= 1e-8");

        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j) {
                const PairConstraint c = program_.constraint(i, j);
                if (c == PairConstraint::Free) pairs_.push_back({i, j, false});
                else if (c == PairConstraint::AtLeastOne) pairs_.push_back({i, j, true});
                // EqualOne entries are fixed at 1 and are not variables.
            }
        slack_count_ = 0;
        for (const auto& p : pairs_) slack_count_ += p.slack ? 1 : 0;
        barrier_nu_ = n_ + slack_count_;
    }

    SdpSolution solve() {
        SdpSolution out;
        const int nvars = static_cast<int>(pairs_.size()) + 1;
        std::vector<double> v(nvars, 0.0);
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            v[k + 1] = pairs_[k].slack ? 2.0 : 0.0;
        v[0] = lambda_max(assemble(v)) + 1.0;

        const double mu_target = tol_ / barrier_nu_;
        double mu = 1.0;
        bool hit_iteration_cap = false;
        int outer = 0;
        while (true) {
            if (!center(v, 1.0 / mu, hit_iteration_cap)) {
                out.status = SolveStatus::NumericalFailure;
                finalize(out, v, mu);
                return out;
            }
            const SymMatrix x = assemble(v);
            SymMatrix s = SymMatrix::identity(n_, v[0]);
            s -= x;
            out.iterations.push_back({outer, v[0], lambda_min(s)});
            ++outer;
            if (mu <= mu_target || outer > 64) break;
            mu /= 5;
        }
        out.status = hit_iteration_cap || mu > mu_target ? SolveStatus::MaxIter
                                                         : SolveStatus::Converged;
        finalize(out, v, mu);
        return out;
    }

private:
    struct Pair {
        int i, j;
        bool slack;
    };

    SymMatrix assemble(const std::vector<double>& v) const {
        SymMatrix x(n_);
        if (program_.variant == ThetaVariant::Lovasz) {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j <= i; ++j)
                    if (program_.constraint(i, j) == PairConstraint::EqualOne) x.set(i, j, 1.0);
        }
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            x.set(pairs_[k].i, pairs_[k].j, v[k + 1]);
        return x;
    }

    std::vector<double> slack_matrix(const std::vector<double>& v) const {
        const SymMatrix x = assemble(v);
        std::vector<double> s(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s[i * n_ + j] = (i == j ? v[0] : 0.0) - x(i, j);
        return s;
    }

    // Barrier value eta*t - log det(tI - X) - sum log(x_p - 1); +inf if outside
    // the domain.
    bool barrier_value(const std::vector<double>& v, double eta, double& value) const {
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if (pairs_[k].slack && v[k + 1] - 1.0 <= 0) return false;
        std::vector<double> s = slack_matrix(v);
        if (!cholesky(s, n_)) return false;
        value = eta * v[0] - cholesky_logdet(s, n_);
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if (pairs_[k].slack) value -= std::log(v[k + 1] - 1.0);
        return true;
    }

    // Newton iterations for fixed barrier weight; false on numerical failure.
    bool center(std::vector<double>& v, double eta, bool& hit_iteration_cap) const {
        const int nvars = static_cast<int>(pairs_.size()) + 1;
        std::vector<double> grad(nvars), dir, h(static_cast<std::size_t>(nvars) * nvars);

        for (int iter = 0; iter < 64; ++iter) {
            std::vector<double> s = slack_matrix(v);
            if (!cholesky(s, n_)) return false;
            const std::vector<double> w = cholesky_inverse(s, n_);
            std::vector<double> w2(static_cast<std::size_t>(n_) * n_, 0.0);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j <= i; ++j) {
                    double acc = 0;
                    for (int k = 0; k < n_; ++k) acc += w[i * n_ + k] * w[k * n_ + j];
                    w2[i * n_ + j] = w2[j * n_ + i] = acc;
                }

            double trace_w = 0, trace_w2 = 0;
            for (int i = 0; i < n_; ++i) {
                trace_w += w[i * n_ + i];
                trace_w2 += w2[i * n_ + i];
            }

            grad[0] = eta - trace_w;
            h[0] = trace_w2;
            for (int a = 0; a < nvars - 1; ++a) {
                const auto& p = pairs_[a];
                const bool diag = p.i == p.j;
                grad[a + 1] = diag ? w[p.i * n_ + p.i] : 2 * w[p.i * n_ + p.j];
                const double cross = diag ? -w2[p.i * n_ + p.i] : -2 * w2[p.i * n_ + p.j];
                h[(a + 1) * static_cast<std::size_t>(nvars)] = cross;
                h[a + 1] = cross;
                for (int b = 0; b <= a; ++b) {
                    const auto& q = pairs_[b];
                    double hab;
                    if (!diag && q.i != q.j)
                        hab = 2 * (w[p.i * n_ + q.i] * w[p.j * n_ + q.j] +
                                   w[p.i * n_ + q.j] * w[p.j * n_ + q.i]);
                    else if (!diag)
                        hab = 2 * w[p.i * n_ + q.i] * w[p.j * n_ + q.i];
                    else if (q.i != q.j)
                        hab = 2 * w[q.i * n_ + p.i] * w[q.j * n_ + p.i];
                    else
                        hab = w[p.i * n_ + q.i] * w[p.i * n_ + q.i];
                    h[(a + 1) * static_cast<std::size_t>(nvars) + (b + 1)] = hab;
                    h[(b + 1) * static_cast<std::size_t>(nvars) + (a + 1)] = hab;
                }
                if (p.slack) {
                    const double sv = v[a + 1] - 1.0;
                    grad[a + 1] -= 1.0 / sv;
                    h[(a + 1) * static_cast<std::size_t>(nvars) + (a + 1)] += 1.0 / (sv * sv);
                }
            }

            if (!solve_spd(h, grad, dir, nvars)) return false;

            double decrement2 = 0;
            for (int k = 0; k < nvars; ++k) decrement2 -= grad[k] * dir[k];
            if (decrement2 / 2 <= 1e-10) return true;

            double f0;
            if (!barrier_value(v, eta, f0)) return false;
            const double slope = -decrement2;
            double alpha = 1.0;
            std::vector<double> trial(nvars);
            double achieved = f0;
            bool stepped = false;
            for (int bt = 0; bt < 60; ++bt) {
                for (int k = 0; k < nvars; ++k) trial[k] = v[k] + alpha * dir[k];
                double f1;
                if (barrier_value(trial, eta, f1) && f1 <= f0 + 0.25 * alpha * slope) {
                    v = trial;
                    achieved = f1;
                    stepped = true;
                    break;
                }
                alpha /= 2;
            }
            // A stalled line search near the center means the iterate is as
            // good as floating point allows at this barrier weight.
            if (!stepped) return true;
            if (f0 - achieved <= 1e-12 * (std::abs(f0) + 1)) return true;
        }
        hit_iteration_cap = true;
        return true;
    }

    void finalize(SdpSolution& out, const std::vector<double>& v, double mu) const {
        out.optimizer = assemble(v);
        out.value = lambda_max(out.optimizer);
        out.gap = mu * barrier_nu_;
    }

    ThetaProgram program_;
    int n_;
    double tol_;
    std::vector<Pair> pairs_;
    int slack_count_ = 0;
    double barrier_nu_ = 0;
};

}  // namespace detail

// Log-barrier interior-point solve of the dual program; the reported value is
// lambda_max of the (feasible) optimizer, so it is always a valid upper bound
// on the theta function being computed.
inline SdpSolution solve_theta(const Graph& g, ThetaVariant variant, double tol = 1e-6) {
    return detail::ThetaSolver(g, variant, tol).solve();
}

inline SdpSolution lovasz_theta(const Graph& g, double tol = 1e-6) {
    return solve_theta(g, ThetaVariant::Lovasz, tol);
}

inline SdpSolution schrijver_theta(const Graph& g, double tol = 1e-6) {
    return solve_theta(g, ThetaVariant::Schrijver, tol);
}

inline nlohmann::json to_json(const SdpSolution& sol) {
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& it : sol.iterations)
        iters.push_back({{"step", it.step},
                         {"objective", it.objective},
                         {"min_eig_slack", it.min_eig_slack}});
    return {{"value", sol.value},
            {"status", to_string(sol.status)},
            {"gap", sol.gap},
            {"iterations", iters},
            {"optimizer", to_json(sol.optimizer)}};
}

}  // namespace capax
