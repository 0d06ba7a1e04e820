#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "capax/fixtures.hpp"
#include "capax/graph.hpp"
#include "capax/hamming_scheme.hpp"
#include "capax/independence.hpp"
#include "capax/matrix.hpp"
#include "capax/rational.hpp"
#include "capax/sdp.hpp"
#include "capax/spectra.hpp"

namespace capax {

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

class FixtureCheckError : public std::runtime_error {
public:
    FixtureCheckError(const std::string& name, const std::string& detail)
        : std::runtime_error("fixture check failed: " + name +
                             (detail.empty() ? "" : " (" + detail + ")")),
          name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Everything the end-to-end reproduction computes, with the verdict that the
// capacity lower bound exceeds the Schrijver value.
struct CounterexampleReport {
    int alpha_g = 0;
    double theta_prime_sdp = 0;
    double theta_sdp = 0;
    Rational theta_exact;
    Rational lambda_max_x_exact;
    int alpha_product_lb = 0;
    double capacity_lb = 0;
    bool verdict = false;
    std::vector<FixtureCheck> fixture_checks;
};

// Safety margin for the verdict; the true gap sqrt(20) - 4 dwarfs it.
inline constexpr double kVerdictMargin = 0.1;

// alpha(G^boxtimes k)^(1/k) from a (possibly budget-limited) search: a valid
// lower bound on the Shannon capacity either way. A known independent set of
// the power may be seeded; it is verified before use.
inline double capacity_lower_bound(const Graph& g, int k, const SearchBudget& budget = {},
                                   const std::vector<int>& seed = {}) {
    const Graph power = strong_power(g, k);
    int best = 0;
    if (!seed.empty()) {
        if (!is_independent_set(power, seed))
            throw std::invalid_argument("seed set is not independent in the strong power");
        best = static_cast<int>(seed.size());
    }
    const MisResult mis = max_independent_set(power, budget);
    best = std::max(best, mis.size);
    return std::pow(static_cast<double>(best), 1.0 / k);
}

// Lovasz theta as a Shannon-capacity upper bound.
inline double capacity_upper_bound(const Graph& g, double tol = 1e-6) {
    const SdpSolution sol = lovasz_theta(g, tol);
    if (sol.status == SolveStatus::NumericalFailure)
        throw std::runtime_error("capacity upper bound: theta solve failed");
    return sol.value;
}

namespace detail {

inline void record(std::vector<FixtureCheck>& checks, const std::string& name, bool pass,
                   const std::string& detail = "") {
    checks.push_back({name, pass, detail});
    if (!pass) throw FixtureCheckError(name, detail);
}

}  // namespace detail

// Full reproduction for G = hamming_graph(5,{1,2}): exact alpha, the exact
// certificate chain pinning theta' = 4 and theta = 16/3, the SDP
// corroboration of both, the size-20 independent set of the strong square,
// and the verdict sqrt(20) > theta'. Any failing check aborts with a named
// diagnostic.
inline CounterexampleReport run_counterexample(const SearchBudget& budget = {},
                                               double tol = 1e-6,
                                               bool exact_product = false) {
    CounterexampleReport report;
    auto& checks = report.fixture_checks;

    const Graph g = hamming_graph(5, {1, 2});
    int degree = 0;
    detail::record(checks, "graph-32-vertices-15-regular",
                   g.vertex_count() == 32 && g.is_regular(&degree) && degree == 15);

    // Independence number, exact, with the published witness.
    const auto witness4 = fixtures::independent_set_4();
    detail::record(checks, "independent-set-4-verifies", is_independent_set(g, witness4));
    const MisResult mis = max_independent_set(g, budget);
    detail::record(checks, "alpha-exact-4",
                   mis.status == SearchStatus::Exact && mis.size == 4,
                   "got size " + std::to_string(mis.size));
    report.alpha_g = mis.size;

    // Exact Schrijver certificate chain.
    const DistanceProfile sp = schrijver_certificate_profile();
    const RationalSymMatrix x = profile_matrix(sp);
    const IntSymMatrix published = fixtures::certificate_matrix();
    bool matches = true;
    bool antidiagonal = true;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            matches = matches && x(i, j) == Rational(published(i, j));
            antidiagonal = antidiagonal && (x(i, j) == 3) == (i + j == 31);
        }
    detail::record(checks, "certificate-matches-published-table", matches);
    detail::record(checks, "certificate-threes-on-antidiagonal", antidiagonal);

    bool feasible = true;
    for (int i = 0; i < 32 && feasible; ++i)
        for (int j = 0; j <= i; ++j)
            if ((i == j || !g.adjacent(i, j)) && x(i, j) < 1) {
                feasible = false;
                break;
            }
    detail::record(checks, "certificate-schrijver-feasible", feasible);

    const SchemeSpectrum xs = profile_spectrum(sp);
    report.lambda_max_x_exact = xs.max_value();
    detail::record(checks, "certificate-lambda-max-4", report.lambda_max_x_exact == 4,
                   to_fraction_string(report.lambda_max_x_exact));

    IntSymMatrix gap = IntSymMatrix::identity(32, 4);
    gap -= published;
    detail::record(checks, "certificate-gap-psd",
                   exact_psd_certify(to_rational_matrix(gap)).is_psd);
    detail::record(checks, "certificate-gap-squared-identity", sym_square(gap) == gap * BigInt(16));

    // SDP corroboration of theta' = 4.
    const SdpSolution sdp_schrijver = schrijver_theta(g, tol);
    detail::record(checks, "schrijver-sdp-converged",
                   sdp_schrijver.status == SolveStatus::Converged, to_string(sdp_schrijver.status));
    report.theta_prime_sdp = sdp_schrijver.value;
    detail::record(checks, "schrijver-sdp-agrees-certificate",
                   std::abs(report.theta_prime_sdp - 4.0) <= 1e-4,
                   "value " + std::to_string(report.theta_prime_sdp));

    // Lovasz theta three ways: spectral bound, exact certificate, SDP.
    const SchemeSpectrum adjacency = profile_spectrum(DistanceProfile(5, {0, 1, 1, 0, 0, 0}));
    Rational lam_min = adjacency.min_value();
    BigInt lam_min_mult = 0;
    for (const auto& line : adjacency.by_eigenspace)
        if (line.value == lam_min) lam_min_mult += line.multiplicity;
    detail::record(checks, "adjacency-lambda-min-minus-3",
                   lam_min == -3 && lam_min_mult == 10);
    report.theta_exact = hoffman_bound(32, 15, lam_min);
    detail::record(checks, "spectral-bound-16-3", report.theta_exact == Rational(16, 3),
                   to_fraction_string(report.theta_exact));

    const DistanceProfile lp = lovasz_certificate_profile();
    const RationalSymMatrix xhat = profile_matrix(lp);
    bool lovasz_feasible = true;
    for (int i = 0; i < 32 && lovasz_feasible; ++i)
        for (int j = 0; j <= i; ++j)
            if ((i == j || !g.adjacent(i, j)) && xhat(i, j) != 1) {
                lovasz_feasible = false;
                break;
            }
    detail::record(checks, "lovasz-certificate-feasible", lovasz_feasible);
    detail::record(checks, "lovasz-certificate-lambda-max-16-3",
                   profile_spectrum(lp).max_value() == Rational(16, 3));

    const SdpSolution sdp_lovasz = lovasz_theta(g, tol);
    detail::record(checks, "lovasz-sdp-converged", sdp_lovasz.status == SolveStatus::Converged,
                   to_string(sdp_lovasz.status));
    report.theta_sdp = sdp_lovasz.value;
    detail::record(checks, "lovasz-triple-agreement",
                   std::abs(report.theta_sdp - to_double(report.theta_exact)) <= 1e-4,
                   "value " + std::to_string(report.theta_sdp));

    // Strong square and the size-20 witness.
    const Graph product = strong_product(g, g);
    detail::record(checks, "product-1024-vertices", product.vertex_count() == 1024);
    const auto indices = fixtures::product_independent_set_indices();
    detail::record(checks, "product-set-has-20-distinct", static_cast<int>(indices.size()) == 20);
    detail::record(checks, "product-independent-set-20-verifies",
                   is_independent_set(product, indices));

    // Pairing two copies of the size-4 witness gives 16 for free; the
    // published set improves it to 20.
    std::vector<int> paired;
    for (int a : witness4)
        for (int b : witness4) paired.push_back(a * 32 + b);
    detail::record(checks, "product-witness-square-independent",
                   is_independent_set(product, paired));
    report.alpha_product_lb = std::max<int>(static_cast<int>(indices.size()),
                                            static_cast<int>(paired.size()));

    if (exact_product) {
        const MisResult exact = max_independent_set(product, budget);
        detail::record(checks, "product-alpha-exact-search",
                       exact.size >= report.alpha_product_lb,
                       std::to_string(exact.size) + (exact.status == SearchStatus::Exact
                                                         ? " (exact)"
                                                         : " (lower bound)"));
        if (exact.status == SearchStatus::Exact) report.alpha_product_lb = exact.size;
    }

    report.capacity_lb = std::sqrt(static_cast<double>(report.alpha_product_lb));
    report.verdict = report.capacity_lb > report.theta_prime_sdp + kVerdictMargin;
    return report;
}

inline nlohmann::json report_to_json(const CounterexampleReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.fixture_checks) {
        nlohmann::json entry = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    return {{"alpha_G", r.alpha_g},
            {"theta_prime_sdp", r.theta_prime_sdp},
            {"theta_sdp", r.theta_sdp},
            {"theta_exact", to_fraction_string(r.theta_exact)},
            {"lambda_max_X_exact", to_fraction_string(r.lambda_max_x_exact)},
            {"alpha_product_lb", r.alpha_product_lb},
            {"capacity_lb", r.capacity_lb},
            {"verdict", r.verdict},
            {"fixture_checks", checks}};
}

inline CounterexampleReport report_from_json(const nlohmann::json& j) {
    CounterexampleReport r;
    r.alpha_g = j.at("alpha_G").get<int>();
    r.theta_prime_sdp = j.at("theta_prime_sdp").get<double>();
    r.theta_sdp = j.at("theta_sdp").get<double>();
    r.theta_exact = parse_fraction(j.at("theta_exact").get<std::string>());
    r.lambda_max_x_exact = parse_fraction(j.at("lambda_max_X_exact").get<std::string>());
    r.alpha_product_lb = j.at("alpha_product_lb").get<int>();
    r.capacity_lb = j.at("capacity_lb").get<double>();
    r.verdict = j.at("verdict").get<bool>();
    for (const auto& c : j.at("fixture_checks")) {
        FixtureCheck check;
        check.name = c.at("name").get<std::string>();
        check.pass = c.at("pass").get<bool>();
        if (c.contains("detail")) check.detail = c.at("detail").get<std::string>();
        r.fixture_checks.push_back(check);
    }
    return r;
}

inline std::string report_text(const CounterexampleReport& r) {
    std::ostringstream out;
    out.precision(4);
    out << std::fixed;
    out << "graph: 32-vertex Hamming-distance graph, distances {1,2}\n"
        << "alpha(G)            = " << r.alpha_g << " (exact)\n"
        << "theta'(G)  [SDP]    = " << r.theta_prime_sdp << "\n"
        << "theta'(G)  [exact]  = " << to_fraction_string(r.lambda_max_x_exact)
        << " (certificate lambda_max meets alpha)\n"
        << "theta(G)   [SDP]    = " << r.theta_sdp << "\n"
        << "theta(G)   [exact]  = " << to_fraction_string(r.theta_exact) << "\n"
        << "alpha(GxG)          >= " << r.alpha_product_lb << "\n"
        << "capacity(G)         >= " << r.capacity_lb << "\n"
        << "verdict: capacity lower bound " << (r.verdict ? "exceeds" : "does not exceed")
        << " theta' by more than " << kVerdictMargin << "\n";
    for (const auto& c : r.fixture_checks)
        out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return out.str();
}

}  // namespace capax
