// twoeig: construct and verify signed graphs with two distinct adjacency
// eigenvalues.  Exit codes: 0 pass, 1 verification failure, 2 usage or
// parse errors.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoeig/doubling.hpp"
#include "twoeig/io.hpp"
#include "twoeig/linegraph.hpp"
#include "twoeig/params.hpp"
#include "twoeig/qext.hpp"
#include "twoeig/spectra.hpp"
#include "twoeig/starcomp.hpp"
#include "twoeig/weighing.hpp"

namespace {

using nlohmann::ordered_json;
using namespace twoeig;

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

ordered_json spectrum_json(const ExactSpectrum& s) {
    ordered_json j;
    j["t"] = s.t;
    j["k"] = s.k;
    j["b"] = s.b;
    j["lambda1"] = sig12(s.lambda1());
    j["lambda2"] = sig12(s.lambda2());
    j["m1"] = s.m1;
    j["m2"] = s.m2;
    j["integral"] = s.integral();
    j["display"] = s.to_string();
    return j;
}

ordered_json ramanujan_json(const RamanujanReport& r) {
    ordered_json j;
    j["k"] = r.k;
    j["lambda_max"] = sig12(r.lambda_max);
    j["bound"] = sig12(r.bound);
    j["pass"] = r.pass;
    return j;
}

// regular / ste / rho / ramanujan block shared by the verify and construct
// report paths
ordered_json verification_json(const SignedGraph& g, const Tolerances& tol) {
    ordered_json j;
    const auto reg = regularity(g);
    j["regular"] = reg ? ordered_json(*reg) : ordered_json(nullptr);
    const auto spec = two_eigenvalue_spectrum(g);
    j["ste"] = spec ? spectrum_json(*spec) : ordered_json(nullptr);
    const auto params = two_path_params(g);
    j["rho"] = params && params->rho ? ordered_json(*params->rho) : ordered_json(nullptr);
    if (reg && *reg >= 2)
        j["ramanujan"] = ramanujan_json(ramanujan_check(g, tol));
    else
        j["ramanujan"] = nullptr;
    return j;
}

struct Cli {
    std::string format = "json";
    bool one_indexed = false;
    double tolerance = Tolerances{}.compare;
    std::string out_path;

    Tolerances tolerances() const {
        Tolerances t;
        t.compare = tolerance;
        t.cluster = std::max(t.cluster, tolerance);
        return t;
    }

    GraphFormat graph_format() const {
        if (format == "json") return GraphFormat::json;
        if (format == "matrix") return GraphFormat::matrix;
        if (format == "dot") return GraphFormat::dot;
        throw CLI::ValidationError("--format", "unknown format " + format);
    }

    void emit_graph(const SignedGraph& g) const {
        const std::string text = to_text(g, graph_format(), one_indexed);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << text;
        }
    }
};

void print_report(const std::string& command, const std::string& digest,
                  ordered_json outcome, std::chrono::steady_clock::time_point t0,
                  std::ostream& os) {
    ordered_json report;
    report["command"] = command;
    report["input_digest"] = digest;
    report["outcome"] = std::move(outcome);
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    os << report.dump(2) << "\n";
}

std::string echo_command(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

// "3" -> 3; "t,b" -> (t + sqrt(b)) / 2
QExt parse_mu(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return QExt(static_cast<long>(std::stoll(text)));
    const long t = std::stol(text.substr(0, comma));
    const long b = std::stol(text.substr(comma + 1));
    if (b < 0) throw std::invalid_argument("--mu: b must be nonnegative");
    QExt root = b == 0 ? QExt(0) : QExt::sqrt_of(b);
    return (QExt(t) + root) / QExt(2);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed graphs with two distinct adjacency eigenvalues: "
                 "constructions and exact verification"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Cli cli;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmdline = echo_command(argc, argv);

    app.add_option("--format", cli.format, "graph output format: json|matrix|dot")
        ->capture_default_str();
    app.add_flag("--one-indexed", cli.one_indexed, "emit JSON with 1-indexed vertices");
    app.add_option("--tolerance", cli.tolerance,
                   "floating comparison tolerance (exact checks are unaffected)")
        ->capture_default_str();
    app.add_option("-o,--output", cli.out_path, "write the graph to a file instead of stdout");

    int exit_code = 0;

    // ---- params ----
    auto* params_cmd = app.add_subcommand("params", "admissible (t, lambda1, lambda2) triples");
    std::vector<std::int64_t> ks;
    std::int64_t n_max = 0;
    bool params_as_json = false;
    params_cmd->add_option("--k", ks, "valency (repeatable)")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
    params_cmd->add_option("--n-max", n_max, "also list feasible orders up to this bound");
    params_cmd->add_flag("--json", params_as_json, "machine-readable output");
    params_cmd->callback([&] {
        ordered_json rows = ordered_json::array();
        for (std::int64_t k : ks) {
            const auto triples = admissible_triples(k);
            if (params_as_json) {
                for (const auto& tr : triples) {
                    ordered_json j;
                    j["k"] = tr.k;
                    j["t"] = tr.t;
                    j["lambda1"] = tr.lambda1.to_string();
                    j["lambda2"] = tr.lambda2.to_string();
                    j["b"] = tr.b;
                    j["type"] = to_string(tr.type);
                    if (n_max > 0) j["feasible_orders"] = feasible_orders(tr, n_max);
                    rows.push_back(std::move(j));
                }
                continue;
            }
            std::cout << "k=" << k << " |";
            for (const auto& tr : triples) std::cout << " " << tr.to_string();
            std::cout << "\n";
            if (k == 8)
                std::cout << "      (the t=-2 triple is printed with lambda1 > lambda2)\n";
            if (n_max > 0) {
                for (const auto& tr : triples) {
                    std::cout << "      " << tr.to_string() << " [" << to_string(tr.type)
                              << "] orders<=" << n_max << ":";
                    for (auto n : feasible_orders(tr, n_max)) std::cout << " " << n;
                    std::cout << "\n";
                }
            }
        }
        if (params_as_json) std::cout << rows.dump(2) << "\n";
    });

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a named family instance");
    construct->require_subcommand(1);

    auto finish_construct = [&](const SignedGraph& g) {
        const auto tol = cli.tolerances();
        const ordered_json outcome = verification_json(g, tol);
        const bool ok = !outcome["ste"].is_null();
        cli.emit_graph(g);
        print_report(cmdline, fnv1a_digest(to_json(g)), outcome, t0, std::cerr);
        if (!ok) exit_code = 1;
    };

    auto* line_cmd = construct->add_subcommand("line-complete",
                                               "line graph of the all-positive complete graph");
    int line_n = 5;
    bool line_negate = false;
    line_cmd->add_option("--n", line_n, "complete graph order")->required()->check(CLI::Range(3, 64));
    line_cmd->add_flag("--negate", line_negate, "negate all edge signs");
    line_cmd->callback([&] {
        const SignedGraph base = line_graph(SignedGraph::complete_positive(line_n));
        finish_construct(line_negate ? base.negated() : base);
    });

    auto* block_cmd = construct->add_subcommand(
        "block8", "8-regular graph on 3m vertices from a weight-4 weighing pair");
    int block_m = 8;
    block_cmd->add_option("--m", block_m, "weighing matrix order (even, >= 8)")->required();
    block_cmd->callback([&] {
        finish_construct(
            assemble_block(build_weighing(pattern_x(block_m)), build_weighing(pattern_y(block_m))));
    });

    auto* chain_cmd =
        construct->add_subcommand("chain", "doubling chain with spectrum +-sqrt(k)");
    std::string chain_seed = "k2";
    std::string seed_file;
    int chain_k = 5;
    chain_cmd->add_option("--seed", chain_seed, "k2 | pentagon | file:<path>")
        ->capture_default_str();
    chain_cmd->add_option("--seed-file", seed_file, "custom seed graph file");
    chain_cmd->add_option("--k", chain_k, "target valency")->required();
    chain_cmd->callback([&] {
        SignedGraph seed = k2_seed();
        if (!seed_file.empty())
            seed = read_graph_file(seed_file);
        else if (chain_seed == "pentagon")
            seed = pentagon_seed();
        else if (chain_seed.rfind("file:", 0) == 0)
            seed = read_graph_file(chain_seed.substr(5));
        else if (chain_seed != "k2")
            throw CLI::ValidationError("--seed", "expected k2, pentagon or file:<path>");
        finish_construct(chain_from(seed, chain_k));
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check spectral claims on a graph file");
    verify->require_subcommand(1);

    std::string in_path;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", in_path, "graph file (JSON or matrix)")->required();
    };

    auto* ste_cmd = verify->add_subcommand("ste", "exact two-eigenvalue check");
    add_input(ste_cmd);
    ste_cmd->callback([&] {
        const std::string bytes = read_text_file(in_path);
        const SignedGraph g = parse_graph(bytes);
        const ordered_json outcome = verification_json(g, cli.tolerances());
        print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
        if (outcome["ste"].is_null()) exit_code = 1;
    });

    auto* weigh_cmd = verify->add_subcommand("weighing", "M M^t = M^t M = alpha I check");
    std::int64_t alpha = 0;
    add_input(weigh_cmd);
    weigh_cmd->add_option("--alpha", alpha, "expected weight (default: row norm)");
    weigh_cmd->callback([&] {
        const std::string bytes = read_text_file(in_path);
        const SignedGraph g = parse_graph(bytes);
        const SignedMatrix m(g.adjacency());
        const auto weight = alpha > 0
                                ? (is_weighing(m, alpha) ? std::optional(alpha) : std::nullopt)
                                : weighing_weight(m);
        ordered_json outcome;
        outcome["weighing"] = weight.has_value();
        outcome["alpha"] = weight ? ordered_json(*weight) : ordered_json(nullptr);
        print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
        if (!weight) exit_code = 1;
    });

    auto* ram_cmd = verify->add_subcommand("ramanujan", "lambda_max <= 2 sqrt(k-1) check");
    add_input(ram_cmd);
    ram_cmd->callback([&] {
        const std::string bytes = read_text_file(in_path);
        const auto rep = ramanujan_check(parse_graph(bytes), cli.tolerances());
        print_report(cmdline, fnv1a_digest(bytes), ramanujan_json(rep), t0, std::cout);
        if (!rep.pass) exit_code = 1;
    });

    auto* line_spec_cmd = verify->add_subcommand("line-spectrum", "line-graph spectrum rule");
    add_input(line_spec_cmd);
    line_spec_cmd->callback([&] {
        const std::string bytes = read_text_file(in_path);
        const auto check = verify_line_spectrum(parse_graph(bytes), cli.tolerances());
        ordered_json outcome;
        outcome["pass"] = check.pass;
        outcome["k"] = check.k;
        outcome["balanced_components"] = check.balanced;
        outcome["max_deviation"] = sig12(check.max_dev);
        if (!check.detail.empty()) outcome["detail"] = check.detail;
        print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
        if (!check.pass) exit_code = 1;
    });

    auto* star_cmd = verify->add_subcommand("star", "exact star-set check");
    std::string graph_path, mu_text, set_csv;
    star_cmd->add_option("--graph", graph_path, "graph file")->required();
    star_cmd->add_option("--mu", mu_text, "eigenvalue: integer 'v' or 't,b' for (t+sqrt(b))/2")
        ->required();
    star_cmd->add_option("--set", set_csv, "comma-separated vertex set")->required();
    star_cmd->callback([&] {
        const std::string bytes = read_text_file(graph_path);
        const SignedGraph g = parse_graph(bytes);
        auto x = parse_csv_ints(set_csv);
        if (cli.one_indexed)
            for (int& v : x) --v;
        const auto check = is_star_set(g, x, parse_mu(mu_text));
        ordered_json outcome;
        outcome["star_set"] = check.pass;
        if (check.mu_in_complement)
            outcome["detail"] = "mu is an eigenvalue of the complement -- not a star set";
        print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
        if (!check.pass) exit_code = 1;
    });

    auto* part_cmd = verify->add_subcommand(
        "partition", "two-sided star partition identity against the graph's own spectrum");
    std::string part_graph, x_csv;
    part_cmd->add_option("--graph", part_graph, "graph file")->required();
    part_cmd->add_option("--x", x_csv, "comma-separated vertex set X (Y is the rest)")
        ->required();
    part_cmd->callback([&] {
        const std::string bytes = read_text_file(part_graph);
        const SignedGraph g = parse_graph(bytes);
        auto x = parse_csv_ints(x_csv);
        if (cli.one_indexed)
            for (int& v : x) --v;
        ordered_json outcome;
        const auto spec = two_eigenvalue_spectrum(g);
        if (!spec) {
            outcome["pass"] = false;
            outcome["detail"] = "graph does not have exactly two distinct eigenvalues";
            print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
            exit_code = 1;
            return;
        }
        std::vector<char> in(g.order(), 0);
        for (int v : x) in[v] = 1;
        std::vector<int> y;
        for (int v = 0; v < g.order(); ++v)
            if (!in[v]) y.push_back(v);
        const auto check =
            verify_partition(g, x, y, spec->lambda1_exact(), spec->lambda2_exact());
        outcome["pass"] = check.pass;
        outcome["spectrum"] = spec->to_string();
        if (!check.detail.empty()) outcome["detail"] = check.detail;
        print_report(cmdline, fnv1a_digest(bytes), outcome, t0, std::cout);
        if (!check.pass) exit_code = 1;
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "exhaustive searches");
    search->require_subcommand(1);
    auto* m4_cmd = search->add_subcommand(
        "block8-m4", "order-4 weighing pairs whose block graph is a 12-vertex STE");
    std::uint64_t budget = 0;
    bool budget_set = false;
    m4_cmd->add_option("--budget", budget, "max candidate pairs examined")
        ->each([&](const std::string&) { budget_set = true; });
    m4_cmd->callback([&] {
        const auto pairs =
            search_order4_pairs(budget_set ? std::optional(budget) : std::nullopt);
        ordered_json outcome;
        outcome["pairs_found"] = pairs.size();
        if (!pairs.empty()) {
            const SignedGraph g = assemble_block(pairs.front().w1, pairs.front().w2);
            outcome["graph"] = verification_json(g, cli.tolerances());
            outcome["w1"] = pairs.front().w1.to_text();
            outcome["w2"] = pairs.front().w2.to_text();
            cli.emit_graph(g);
        }
        print_report(cmdline, fnv1a_digest(std::to_string(pairs.size())), outcome, t0,
                     std::cerr);
        if (pairs.empty()) exit_code = 1;
    });

    // ---- export ----
    auto* export_cmd = app.add_subcommand("export", "re-emit a graph file in another format");
    std::string export_path;
    export_cmd->add_option("file", export_path, "graph file")->required();
    export_cmd->callback([&] { cli.emit_graph(read_graph_file(export_path)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
