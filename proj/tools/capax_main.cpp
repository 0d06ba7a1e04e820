// capax: graph-invariants laboratory CLI.
//
// Subcommands: build, alpha, theta, theta-prime, spectrum, strong-power,
// verify-set, verify-cert, counterexample.
// Exit codes: 0 success / verdict true, 1 verdict false or verification
// failure, 2 usage error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "capax/builtins.hpp"
#include "capax/graph.hpp"
#include "capax/graph_io.hpp"
#include "capax/hamming_scheme.hpp"
#include "capax/independence.hpp"
#include "capax/matrix.hpp"
#include "capax/pipeline.hpp"
#include "capax/sdp.hpp"
#include "capax/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string builtin;
    std::string graph_path;
    std::string graph_format = "edgelist";
    double tol = 1e-6;
    long long max_nodes = 50'000'000;
    double max_seconds = 60.0;
    std::string format = "text";
    std::string out_path;
    int power = 2;
    std::string set_path;
    std::string cert_path;
    std::string variant = "schrijver";
    bool exact_product = false;
};

void add_graph_source(CLI::App* cmd, Options& opt) {
    auto* builtin = cmd->add_option("--builtin", opt.builtin,
                                    "builtin graph: hamming:<m>:<d1,d2,...>, complete:<n>, "
                                    "cycle:<n>, empty:<n>, petersen");
    auto* file = cmd->add_option("--graph", opt.graph_path, "path to a graph file");
    cmd->add_option("--graph-format", opt.graph_format, "graph file format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    builtin->excludes(file);
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--tol", opt.tol, "numerical tolerance")
        ->check(CLI::Range(1e-8, 1e-2));
    cmd->add_option("--max-nodes", opt.max_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-seconds", opt.max_seconds, "search time budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

capax::Graph load_graph(const Options& opt) {
    if (!opt.builtin.empty()) return capax::builtin_graph(opt.builtin);
    if (!opt.graph_path.empty())
        return capax::parse_graph(slurp(opt.graph_path),
                                  capax::graph_format_from_name(opt.graph_format));
    throw std::invalid_argument("a graph source is required (--builtin or --graph)");
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    out << text;
}

std::string format_value(double v) {
    std::ostringstream s;
    s.precision(4);
    s << std::fixed << v;
    return s.str();
}

int run_theta(const Options& opt, capax::ThetaVariant variant) {
    const capax::Graph g = load_graph(opt);
    const capax::SdpSolution sol = capax::solve_theta(g, variant, opt.tol);
    if (opt.format == "json") {
        nlohmann::json j = capax::to_json(sol);
        j["variant"] = variant == capax::ThetaVariant::Lovasz ? "lovasz" : "schrijver";
        write_output(opt, j.dump(2) + "\n");
    } else {
        write_output(opt, format_value(sol.value) + "\n");
    }
    return sol.status == capax::SolveStatus::Converged ? kExitOk : kExitNumerical;
}

int run_alpha(const Options& opt) {
    const capax::Graph g = load_graph(opt);
    const capax::MisResult mis =
        capax::max_independent_set(g, {opt.max_nodes, opt.max_seconds});
    const bool exact = mis.status == capax::SearchStatus::Exact;
    if (opt.format == "json") {
        nlohmann::json j = {{"alpha", mis.size},
                            {"status", exact ? "exact" : "lower-bound"},
                            {"certificate", capax::to_json(mis.certificate)},
                            {"nodes_explored", mis.nodes_explored}};
        write_output(opt, j.dump(2) + "\n");
    } else {
        write_output(opt, (exact ? "" : ">= ") + std::to_string(mis.size) + "\n");
    }
    return kExitOk;
}

int run_spectrum(const Options& opt) {
    const capax::Graph g = load_graph(opt);
    const auto eigenvalues = capax::sym_eigenvalues(capax::adjacency_matrix(g), opt.tol);
    const auto groups = capax::group_eigenvalues(eigenvalues);
    if (opt.format == "json") {
        nlohmann::json jg = nlohmann::json::array();
        for (const auto& grp : groups)
            jg.push_back({{"value", grp.value}, {"multiplicity", grp.multiplicity}});
        write_output(opt, nlohmann::json{{"eigenvalues", eigenvalues}, {"groups", jg}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (const auto& grp : groups)
            out << format_value(grp.value) << " x" << grp.multiplicity << "\n";
        write_output(opt, out.str());
    }
    return kExitOk;
}

int run_build(const Options& opt, int power) {
    capax::Graph g = load_graph(opt);
    if (power > 1) g = capax::strong_power(g, power);
    write_output(opt, capax::emit_graph(g, capax::graph_format_from_name(opt.graph_format)));
    return kExitOk;
}

int run_verify_set(const Options& opt) {
    const capax::Graph g = load_graph(opt);
    const auto cert =
        capax::certificate_from_json(nlohmann::json::parse(slurp(opt.set_path)));
    const bool ok = capax::is_independent_set(g, cert.vertices);
    if (opt.format == "json") {
        write_output(opt, nlohmann::json{{"independent", ok}, {"size", cert.size()}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << (ok ? "independent" : "NOT independent") << " (size " << cert.size() << ")\n";
        write_output(opt, out.str());
    }
    return ok ? kExitOk : kExitVerdictFalse;
}

int run_verify_cert(const Options& opt) {
    const capax::Graph g = load_graph(opt);
    const auto variant = opt.variant == "lovasz" ? capax::ThetaVariant::Lovasz
                                                 : capax::ThetaVariant::Schrijver;
    const nlohmann::json j = nlohmann::json::parse(slurp(opt.cert_path));
    capax::SymMatrix x;
    if (j.is_array()) {
        // Full square integer matrix.
        const int n = static_cast<int>(j.size());
        x = capax::SymMatrix(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k <= i; ++k) x.set(i, k, j.at(i).at(k).get<double>());
    } else {
        x = capax::sym_matrix_from_json(j);
    }
    const auto [lmax, violation] = capax::verify_feasible(capax::ThetaProgram(g, variant), x);
    const bool feasible = violation <= 1e-8;
    if (opt.format == "json") {
        write_output(opt, nlohmann::json{{"lambda_max", lmax},
                                         {"max_violation", violation},
                                         {"feasible", feasible}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "lambda_max = " << format_value(lmax) << "\n"
            << "max_violation = " << violation << "\n"
            << (feasible ? "feasible: theta bound holds" : "NOT feasible") << "\n";
        write_output(opt, out.str());
    }
    return feasible ? kExitOk : kExitVerdictFalse;
}

int run_counterexample(const Options& opt) {
    capax::CounterexampleReport report;
    try {
        report = capax::run_counterexample({opt.max_nodes, opt.max_seconds}, opt.tol,
                                           opt.exact_product);
    } catch (const capax::FixtureCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdictFalse;
    }
    if (opt.format == "json")
        write_output(opt, capax::report_to_json(report).dump(2) + "\n");
    else
        write_output(opt, capax::report_text(report));
    return report.verdict ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph invariants laboratory: independence numbers, Lovasz/Schrijver theta, "
                 "Shannon-capacity bounds"};
    app.require_subcommand(1);

    Options opt;
    (void)capax::search_thread_cap();  // validate CAPAX_THREADS early

    auto* build = app.add_subcommand("build", "construct a graph and emit it");
    add_graph_source(build, opt);
    add_common(build, opt);

    auto* alpha = app.add_subcommand("alpha", "maximum independent set size");
    add_graph_source(alpha, opt);
    add_common(alpha, opt);

    auto* theta = app.add_subcommand("theta", "Lovasz theta via SDP");
    add_graph_source(theta, opt);
    add_common(theta, opt);

    auto* theta_prime = app.add_subcommand("theta-prime", "Schrijver theta via SDP");
    add_graph_source(theta_prime, opt);
    add_common(theta_prime, opt);

    auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum with multiplicities");
    add_graph_source(spectrum, opt);
    add_common(spectrum, opt);

    auto* strong_power = app.add_subcommand("strong-power", "emit the k-fold strong power");
    add_graph_source(strong_power, opt);
    add_common(strong_power, opt);
    strong_power->add_option("--power", opt.power, "exponent k")->required()
        ->check(CLI::PositiveNumber);

    auto* verify_set = app.add_subcommand("verify-set", "check an independent-set certificate");
    add_graph_source(verify_set, opt);
    add_common(verify_set, opt);
    verify_set->add_option("--set", opt.set_path, "JSON array of vertex indices")->required();

    auto* verify_cert = app.add_subcommand("verify-cert", "check a dual feasibility certificate");
    add_graph_source(verify_cert, opt);
    add_common(verify_cert, opt);
    verify_cert->add_option("--cert", opt.cert_path, "JSON matrix file")->required();
    verify_cert->add_option("--variant", opt.variant, "program variant")
        ->check(CLI::IsMember({"lovasz", "schrijver"}));

    auto* counter = app.add_subcommand("counterexample",
                                       "reproduce the full capacity-vs-theta' demonstration");
    add_common(counter, opt);
    counter->add_flag("--exact-product", opt.exact_product,
                      "also run the exact product search under the budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(opt, 1);
        if (alpha->parsed()) return run_alpha(opt);
        if (theta->parsed()) return run_theta(opt, capax::ThetaVariant::Lovasz);
        if (theta_prime->parsed()) return run_theta(opt, capax::ThetaVariant::Schrijver);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (strong_power->parsed()) return run_build(opt, opt.power);
        if (verify_set->parsed()) return run_verify_set(opt);
        if (verify_cert->parsed()) return run_verify_cert(opt);
        if (counter->parsed()) return run_counterexample(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
