#include "rank_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "totalrank/dense_matrix.hpp"
#include "totalrank/dense_verify.hpp"
#include "totalrank/errors.hpp"
#include "totalrank/graph_io.hpp"
#include "totalrank/pagerank.hpp"
#include "totalrank/quadrature.hpp"
#include "totalrank/ranking.hpp"
#include "totalrank/series.hpp"

namespace totalrank::cli {

namespace {

constexpr double kDefaultPagerankTol = 1e-10;
constexpr double kDefaultSeriesTol = 1e-4;
constexpr double kDefaultAlpha = 0.85;

// Thrown for bad input files and flag values the parser cannot catch.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string path;
    std::string teleport_path;
};

struct Loaded {
    GraphEdges graph;
    TransitionMatrix h;
    StochasticVector teleport;
};

GraphEdges read_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open graph file '" + path + "'");
    return parse_edge_list(in);
}

Loaded load(const GraphInput& input) {
    GraphEdges graph = read_graph(input.path);
    if (graph.node_count == 0) throw ValidationError("graph '" + input.path + "' has no nodes");
    std::optional<StochasticVector> teleport;
    if (input.teleport_path.empty()) {
        teleport = StochasticVector::uniform(graph.node_count);
    } else {
        std::ifstream in(input.teleport_path, std::ios::binary);
        if (!in) throw UsageError("cannot open teleport file '" + input.teleport_path + "'");
        teleport = parse_teleport(in);
        if (teleport->size() != graph.node_count) {
            throw DimensionError("teleport file has " + std::to_string(teleport->size()) + " weights, graph has " +
                                 std::to_string(graph.node_count) + " nodes");
        }
    }
    TransitionMatrix h = build_transition(graph, *teleport);
    return Loaded{std::move(graph), std::move(h), std::move(*teleport)};
}

void write_tsv(std::ostream& out, std::span<const double> scores) {
    for (std::size_t i : ranking_order(scores)) out << i << '\t' << format_score(scores[i]) << '\n';
}

enum class Method { Power, Dense, Series, Quadrature };

Method parse_method(const std::string& name) {
    if (name == "power") return Method::Power;
    if (name == "dense") return Method::Dense;
    if (name == "series") return Method::Series;
    if (name == "quadrature") return Method::Quadrature;
    throw UsageError("unknown method '" + name + "' (expected power, dense, series or quadrature)");
}

RankResult compute(Method method, const Loaded& in, double alpha, std::optional<double> tol, bool renormalize) {
    switch (method) {
        case Method::Power: {
            const double t = tol.value_or(kDefaultPagerankTol);
            RankResult r = power_iteration(in.h, in.teleport, DampingFactor(alpha), t);
            if (!r.converged) {
                throw ConvergenceError("power iteration stopped after " + std::to_string(r.iterations_or_terms) +
                                       " iterations with error bound " + format_score(r.error_bound));
            }
            return r;
        }
        case Method::Dense:
            return dense_solve(to_dense(in.h), in.teleport, DampingFactor(alpha));
        case Method::Series: {
            SeriesConfig cfg;
            cfg.tol = tol.value_or(kDefaultSeriesTol);
            cfg.renormalize = renormalize;
            RankResult r = series_sum(in.h, in.teleport, cfg);
            if (!r.converged) {
                throw ConvergenceError("series needs more than " + std::to_string(cfg.max_terms) +
                                       " terms for this tolerance; use --method quadrature");
            }
            return r;
        }
        case Method::Quadrature:
            return marginalize_pagerank(in.h, in.teleport);
    }
    throw UsageError("unreachable");
}

void report(std::ostream& err, const RankResult& r) {
    err << "# method=" << to_string(r.method) << " iterations_or_terms=" << r.iterations_or_terms
        << " error_bound=" << format_score(r.error_bound) << (r.certified ? " (certified)" : " (estimate)")
        << (r.renormalized ? " renormalized" : "") << '\n';
}

// --- subcommands ---

int cmd_stats(const GraphInput& input, std::ostream& out) {
    const Loaded in = load(input);
    std::size_t self_loops = 0;
    for (const Edge& e : in.graph.edges) self_loops += e.src == e.dst;
    double worst = 0.0;
    for (std::size_t j = 0; j < in.h.size(); ++j) worst = std::max(worst, std::abs(in.h.column_sum(j) - 1.0));

    out << "nodes\t" << in.graph.node_count << '\n';
    out << "edges\t" << in.graph.edges.size() << '\n';
    out << "self_loops\t" << self_loops << '\n';
    out << "dangling\t" << in.h.dangling_columns().size() << '\n';
    out << "nonzeros\t" << in.h.nonzeros() << '\n';
    out << "max_column_sum_deviation\t" << format_score(worst) << '\n';
    out << "column_sums\t" << (worst <= 1e-12 ? "ok" : "FAIL") << '\n';
    return worst <= 1e-12 ? kSuccess : kNumericalError;
}

struct PagerankArgs {
    GraphInput input;
    double alpha = kDefaultAlpha;
    double tol = kDefaultPagerankTol;
    std::string method = "power";
    bool verbose = false;
};

int cmd_pagerank(const PagerankArgs& args, std::ostream& out, std::ostream& err) {
    const Method m = parse_method(args.method);
    if (m != Method::Power && m != Method::Dense) throw UsageError("pagerank --method must be power or dense");
    const Loaded in = load(args.input);
    const RankResult r = compute(m, in, args.alpha, args.tol, true);
    if (args.verbose) report(err, r);
    write_tsv(out, r.vector);
    return kSuccess;
}

struct TotalrankArgs {
    GraphInput input;
    std::string method = "series";
    std::optional<double> tol;
    bool no_renormalize = false;
    bool verbose = false;
};

int cmd_totalrank(const TotalrankArgs& args, std::ostream& out, std::ostream& err) {
    const Method m = parse_method(args.method);
    if (m != Method::Series && m != Method::Quadrature) {
        throw UsageError("totalrank --method must be series or quadrature");
    }
    const Loaded in = load(args.input);
    const RankResult r = compute(m, in, kDefaultAlpha, args.tol, !args.no_renormalize);
    if (args.verbose) report(err, r);
    write_tsv(out, r.vector);
    return kSuccess;
}

struct CompareArgs {
    GraphInput input;
    std::string methods;
    double alpha = kDefaultAlpha;
    std::optional<double> tol;
    std::size_t top_k = 10;
    bool json = false;
};

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    const auto comma = args.methods.find(',');
    if (comma == std::string::npos || args.methods.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--methods expects exactly two comma-separated methods, e.g. series,quadrature");
    }
    const std::string first = args.methods.substr(0, comma);
    const std::string second = args.methods.substr(comma + 1);
    const Method m1 = parse_method(first);
    const Method m2 = parse_method(second);

    const Loaded in = load(args.input);
    const RankResult r1 = compute(m1, in, args.alpha, args.tol, true);
    const RankResult r2 = compute(m2, in, args.alpha, args.tol, true);
    const RankComparison c = compare_rankings(r1.vector, r2.vector, args.top_k, {first, second});

    if (args.json) {
        nlohmann::ordered_json j;
        j["methods"] = {c.methods.first, c.methods.second};
        j["kendall_tau"] = c.kendall_tau ? nlohmann::ordered_json(*c.kendall_tau) : nlohmann::ordered_json(nullptr);
        j["l1_distance"] = c.l1_distance;
        j["top_k"] = c.top_k;
        j["top_k_overlap"] = c.top_k_overlap;
        j["error_bounds"] = {r1.error_bound, r2.error_bound};
        out << j.dump(2) << '\n';
    } else {
        const auto row = [&](const std::string& key, const std::string& value) {
            out << std::left << std::setw(16) << key << value << '\n';
        };
        row("methods", c.methods.first + " vs " + c.methods.second);
        row("kendall_tau", c.kendall_tau ? format_score(*c.kendall_tau) : "undefined");
        row("l1_distance", format_score(c.l1_distance));
        row("top_k", std::to_string(c.top_k));
        row("top_k_overlap", std::to_string(c.top_k_overlap));
        row("error_bounds", format_score(r1.error_bound) + " " + format_score(r2.error_bound));
    }
    return kSuccess;
}

struct VerifyArgs {
    VerifySuiteConfig cfg;
    bool json = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const auto checks = run_identity_suite(args.cfg);
    const bool all = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
    if (args.json) {
        nlohmann::ordered_json j;
        j["n"] = args.cfg.n;
        j["trials"] = args.cfg.trials;
        j["seed"] = args.cfg.seed;
        j["passed"] = all;
        auto& list = j["identities"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["max_residual"] = c.max_residual;
            e["threshold"] = c.threshold;
            e["cases"] = c.cases;
            e["identity"] = c.description;
            list.push_back(std::move(e));
        }
        out << j.dump(2) << '\n';
    } else {
        for (const auto& c : checks) {
            out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << c.name
                << " max_residual=" << std::setw(20) << format_score(c.max_residual)
                << " threshold=" << std::setw(20) << format_score(c.threshold) << " cases=" << std::setw(4)
                << c.cases << ' ' << c.description << '\n';
        }
        out << (all ? "all identities hold" : "identity check FAILED") << '\n';
    }
    return all ? kSuccess : kNumericalError;
}

void add_graph_args(CLI::App* sub, GraphInput& input) {
    sub->add_option("FILE", input.path, "edge-list file ('-' for stdin)")->required();
    sub->add_option("--teleport", input.teleport_path, "teleport weights, one per line (default uniform)");
}

}  // namespace

std::string format_score(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), ptr);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Damped and damping-free (TotalRank) graph ranking", "rank"};
    app.require_subcommand(1);

    GraphInput stats_input;
    auto* stats = app.add_subcommand("stats", "ingest a graph and report its structure");
    add_graph_args(stats, stats_input);

    PagerankArgs pr;
    auto* pagerank = app.add_subcommand("pagerank", "damped PageRank, node<TAB>score sorted by score");
    add_graph_args(pagerank, pr.input);
    pagerank->add_option("--alpha", pr.alpha, "damping factor in (0, 1)")->required();
    pagerank->add_option("--tol", pr.tol, "certified L1 tolerance (power method)")->capture_default_str();
    pagerank->add_option("--method", pr.method, "power | dense")->capture_default_str();
    pagerank->add_flag("-v,--verbose", pr.verbose, "print solver metadata to stderr");

    TotalrankArgs tr;
    auto* totalrank = app.add_subcommand("totalrank", "PageRank averaged over all damping factors");
    add_graph_args(totalrank, tr.input);
    totalrank->add_option("--method", tr.method, "series | quadrature")->capture_default_str();
    totalrank->add_option("--tol", tr.tol, "series L1 tolerance (default 1e-4)");
    totalrank->add_flag("--no-renormalize", tr.no_renormalize, "emit the raw truncated series");
    totalrank->add_flag("-v,--verbose", tr.verbose, "print solver metadata to stderr");

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "compare the rankings of two methods");
    add_graph_args(compare, cmp.input);
    compare->add_option("--methods", cmp.methods, "two of power,dense,series,quadrature")->required();
    compare->add_option("--alpha", cmp.alpha, "damping factor for power/dense")->capture_default_str();
    compare->add_option("--tol", cmp.tol, "tolerance for power/series");
    compare->add_option("--top-k", cmp.top_k, "size of the top-k overlap set")->capture_default_str();
    compare->add_flag("--json", cmp.json, "emit JSON");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check the derivation identities on random dense matrices");
    verify->add_option("--n", ver.cfg.n, "matrix dimension")->capture_default_str();
    verify->add_option("--trials", ver.cfg.trials, "random matrices per identity")->capture_default_str();
    verify->add_option("--seed", ver.cfg.seed, "random seed")->capture_default_str();
    verify->add_flag("--json", ver.json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "rank: " << e.what() << '\n';
        if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        } else {
            err << app.help();
        }
        return kUsageError;
    }

    try {
        if (stats->parsed()) return cmd_stats(stats_input, out);
        if (pagerank->parsed()) return cmd_pagerank(pr, out, err);
        if (totalrank->parsed()) return cmd_totalrank(tr, out, err);
        if (compare->parsed()) return cmd_compare(cmp, out);
        if (verify->parsed()) return cmd_verify(ver, out);
    } catch (const UsageError& e) {
        err << "rank: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "rank: numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const Error& e) {
        err << "rank: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace totalrank::cli
