#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "capax/graph.hpp"
#include "capax/graph_io.hpp"
#include "capax/builtins.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(std::tmpnam(nullptr)) + "_capax_out";
    const std::string cmd =
        std::string(CAPAX_CLI_PATH) + " " + args + " >" + out_path + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.out = buf.str();
    std::remove(out_path.c_str());
    return result;
}

std::string fixture_path(const std::string& name) {
    return std::string(CAPAX_FIXTURE_DIR) + "/" + name;
}

std::string golden_path(const std::string& name) {
    return std::string(CAPAX_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_file(const std::string& contents) {
    const std::string path = std::string(std::tmpnam(nullptr)) + "_capax_in";
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("alpha subcommand prints the independence number") {
    const RunResult r = run_cli("alpha --builtin hamming:5:1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("alpha json output matches the golden file") {
    const RunResult r = run_cli("alpha --builtin hamming:5:1,2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto got = nlohmann::json::parse(r.out);
    const auto golden = nlohmann::json::parse(slurp(golden_path("alpha_hamming5_12.json")));
    CHECK(got == golden);
    // Canonicalized byte comparison (keys are emitted sorted).
    CHECK(got.dump(2) == golden.dump(2));
}

TEST_CASE("theta of a complete graph") {
    const RunResult r = run_cli("theta --builtin complete:7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.0000\n");
}

TEST_CASE("theta-prime of the 4-cycle") {
    const RunResult r = run_cli("theta-prime --builtin cycle:4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2.0000\n");
}

TEST_CASE("spectrum subcommand groups multiplicities") {
    const RunResult r = run_cli("spectrum --builtin petersen");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3.0000 x1\n") != std::string::npos);
    CHECK(r.out.find("1.0000 x5\n") != std::string::npos);
    CHECK(r.out.find("-2.0000 x4\n") != std::string::npos);
}

TEST_CASE("build and strong-power emit parseable graphs") {
    const RunResult edge = run_cli("build --builtin petersen");
    REQUIRE(edge.exit_code == 0);
    CHECK(capax::parse_edge_list(edge.out) == capax::petersen_graph());

    const RunResult g6 = run_cli("build --builtin petersen --graph-format graph6");
    REQUIRE(g6.exit_code == 0);
    CHECK(capax::parse_graph6(g6.out) == capax::petersen_graph());

    const RunResult power = run_cli("strong-power --builtin cycle:4 --power 2");
    REQUIRE(power.exit_code == 0);
    const capax::Graph expected =
        capax::strong_product(capax::cycle_graph(4), capax::cycle_graph(4));
    CHECK(capax::parse_edge_list(power.out) == expected);
}

TEST_CASE("verify-set accepts the shipped product certificate") {
    const RunResult power = run_cli("strong-power --builtin hamming:5:1,2 --power 2");
    REQUIRE(power.exit_code == 0);
    const std::string graph_path = temp_file(power.out);

    const RunResult ok = run_cli("verify-set --graph " + graph_path + " --set " +
                                 fixture_path("hamming5_12_product_independent_set.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("independent (size 20)") != std::string::npos);

    const std::string bad_path = temp_file("[0, 1]\n");
    const RunResult bad = run_cli("verify-set --builtin hamming:5:1,2 --set " + bad_path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("NOT independent") != std::string::npos);

    std::remove(graph_path.c_str());
    std::remove(bad_path.c_str());
}

TEST_CASE("verify-cert reports the certificate bound") {
    const RunResult r = run_cli("verify-cert --builtin hamming:5:1,2 --variant schrijver --cert " +
                                fixture_path("hamming5_12_schrijver_certificate.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("lambda_max = 4.0000") != std::string::npos);
    CHECK(r.out.find("feasible") != std::string::npos);

    // The same matrix violates the Lovasz equality constraints (entries 3).
    const RunResult bad = run_cli("verify-cert --builtin hamming:5:1,2 --variant lovasz --cert " +
                                  fixture_path("hamming5_12_schrijver_certificate.json"));
    CHECK(bad.exit_code == 1);
}

TEST_CASE("counterexample run verifies end to end") {
    const RunResult r = run_cli("counterexample --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("verdict").get<bool>());
    CHECK(j.at("alpha_G").get<int>() == 4);
    CHECK(j.at("theta_exact").get<std::string>() == "16/3");
    CHECK(j.at("alpha_product_lb").get<int>() == 20);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("alpha --builtin hamming:5:1,2 --no-such-flag").exit_code == 2);
    CHECK(run_cli("alpha").exit_code == 2);                          // no graph source
    CHECK(run_cli("alpha --builtin nosuch:3").exit_code == 2);       // bad builtin
    CHECK(run_cli("theta --builtin cycle:5 --tol 0.5").exit_code == 2);
    CHECK(run_cli("verify-set --builtin cycle:5").exit_code == 2);   // missing --set
    CHECK(run_cli("strong-power --builtin cycle:5").exit_code == 2); // missing --power
    CHECK(run_cli("alpha --graph /nonexistent/file").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("alpha --help").exit_code == 0);
}

TEST_CASE("output file option") {
    const std::string out_path = std::string(std::tmpnam(nullptr)) + "_capax_file";
    const RunResult r = run_cli("alpha --builtin cycle:5 --out " + out_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_path) == "2\n");
    std::remove(out_path.c_str());
}
