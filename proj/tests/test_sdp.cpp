#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "capax/builtins.hpp"
#include "capax/graph.hpp"
#include "capax/hamming_scheme.hpp"
#include "capax/independence.hpp"
#include "capax/sdp.hpp"
#include "capax/spectra.hpp"
#include "test_util.hpp"

using namespace capax;

TEST_CASE("lovasz theta of complete graphs is 1") {
    for (int n : {1, 2, 3, 5, 7}) {
        const SdpSolution sol = lovasz_theta(complete_graph(n), 1e-6);
        REQUIRE(sol.status == SolveStatus::Converged);
        CHECK(std::abs(sol.value - 1.0) <= 1e-5);
    }
}

TEST_CASE("lovasz theta of edgeless graphs is n") {
    for (int n : {1, 2, 4, 6}) {
        const SdpSolution sol = lovasz_theta(empty_graph(n), 1e-6);
        REQUIRE(sol.status == SolveStatus::Converged);
        CHECK(std::abs(sol.value - n) <= 1e-5);
    }
}

TEST_CASE("lovasz theta of the 5-cycle is sqrt(5)") {
    const SdpSolution sol = lovasz_theta(cycle_graph(5), 1e-6);
    REQUIRE(sol.status == SolveStatus::Converged);
    CHECK(std::abs(sol.value - std::sqrt(5.0)) <= 1e-4);
}

TEST_CASE("schrijver theta of the example graph is 4") {
    const SdpSolution sol = schrijver_theta(hamming_graph(5, {1, 2}), 1e-6);
    REQUIRE(sol.status == SolveStatus::Converged);
    CHECK(std::abs(sol.value - 4.0) <= 1e-4);
}

TEST_CASE("schrijver theta of the edgeless graph is n") {
    const SdpSolution sol = schrijver_theta(empty_graph(4), 1e-6);
    REQUIRE(sol.status == SolveStatus::Converged);
    CHECK(std::abs(sol.value - 4.0) <= 1e-5);
}

TEST_CASE("schrijver theta of the 4-cycle is 2") {
    const SdpSolution sol = schrijver_theta(cycle_graph(4), 1e-6);
    REQUIRE(sol.status == SolveStatus::Converged);
    CHECK(std::abs(sol.value - 2.0) <= 1e-4);
    // Sandwiched by this suite's own exact ends: alpha = 2 and theta = 2.
    CHECK(max_independent_set(cycle_graph(4)).size == 2);
    CHECK(std::abs(lovasz_theta(cycle_graph(4), 1e-6).value - 2.0) <= 1e-4);
}

TEST_CASE("solver obeys its own feasibility report") {
    const Graph g = petersen_graph();
    for (ThetaVariant variant : {ThetaVariant::Lovasz, ThetaVariant::Schrijver}) {
        const SdpSolution sol = solve_theta(g, variant, 1e-6);
        REQUIRE(sol.status == SolveStatus::Converged);
        const auto [lmax, violation] = verify_feasible(ThetaProgram(g, variant), sol.optimizer);
        CHECK(violation <= 1e-8);
        CHECK(sol.value <= lmax + 1e-8);
        CHECK(std::abs(sol.value - lmax) <= 1e-8);
        CHECK(sol.gap <= 1e-6);
        REQUIRE_FALSE(sol.iterations.empty());
        for (const auto& record : sol.iterations) CHECK(record.min_eig_slack > 0);
    }
}

TEST_CASE("sandwich and relaxation order on random graphs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        const Graph g = testutil::random_graph(n, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
        const int alpha = testutil::brute_force_alpha(g);
        const SdpSolution prime = schrijver_theta(g, 1e-6);
        const SdpSolution full = lovasz_theta(g, 1e-6);
        REQUIRE(prime.status == SolveStatus::Converged);
        REQUIRE(full.status == SolveStatus::Converged);
        REQUIRE(alpha <= prime.value + 1e-4);
        REQUIRE(prime.value <= full.value + 1e-6);
    }
}

TEST_CASE("edge-transitive graphs meet the spectral bound") {
    struct Case {
        Graph graph;
        const char* name;
    };
    const Case cases[] = {{hamming_graph(5, {1, 2}), "hamming"},
                          {cycle_graph(5), "c5"},
                          {cycle_graph(7), "c7"},
                          {petersen_graph(), "petersen"}};
    for (const auto& c : cases) {
        CAPTURE(c.name);
        int degree = 0;
        REQUIRE(c.graph.is_regular(&degree));
        const double lmin = lambda_min(adjacency_matrix(c.graph));
        const double bound = hoffman_bound(c.graph.vertex_count(), degree, lmin);
        const SdpSolution sol = lovasz_theta(c.graph, 1e-6);
        REQUIRE(sol.status == SolveStatus::Converged);
        CHECK(std::abs(sol.value - bound) <= 1e-4);
        CHECK(bound >= sol.value - 1e-4);
    }
}

TEST_CASE("feasibility verifier on the closed-form certificates") {
    const Graph g = hamming_graph(5, {1, 2});

    const SymMatrix x = to_double_matrix(profile_matrix(schrijver_certificate_profile()));
    const auto [xs_lmax, xs_violation] = verify_feasible(ThetaProgram(g, ThetaVariant::Schrijver), x);
    CHECK(std::abs(xs_lmax - 4.0) <= 1e-9);
    CHECK(xs_violation == 0.0);

    const SymMatrix xhat = to_double_matrix(profile_matrix(lovasz_certificate_profile()));
    const auto [xl_lmax, xl_violation] = verify_feasible(ThetaProgram(g, ThetaVariant::Lovasz), xhat);
    CHECK(std::abs(xl_lmax - 16.0 / 3.0) <= 1e-9);
    CHECK(xl_violation == 0.0);

    // The identity is infeasible wherever a non-edge entry must be 1.
    const auto [id_lmax, id_violation] =
        verify_feasible(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz),
                        SymMatrix::identity(5));
    CHECK(id_lmax == doctest::Approx(1.0));
    CHECK(id_violation == doctest::Approx(1.0));
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(lovasz_theta(cycle_graph(5), 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(lovasz_theta(hamming_graph(8, {1}), 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(verify_feasible(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz),
                                    SymMatrix::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("solution serializes to JSON") {
    const SdpSolution sol = lovasz_theta(complete_graph(3), 1e-6);
    const auto j = to_json(sol);
    CHECK(j.contains("value"));
    CHECK(j.at("status").get<std::string>() == "CONVERGED");
    CHECK(j.contains("gap"));
    CHECK(j.at("iterations").is_array());
    CHECK(j.at("optimizer").at("dim").get<int>() == 3);
}
