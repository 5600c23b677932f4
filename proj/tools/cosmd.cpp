// Command-line surface over the co-graph strong-metric-dimension library.
// Subcommands: smd, srg, recognize, verify, gen, bench, discrepancy.
// Exit codes: 0 ok, 1 parse/recognition failure, 2 connectivity violation,
// 3 oracle mismatch.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosmd/cotree.hpp"
#include "cosmd/discrepancy.hpp"
#include "cosmd/generator.hpp"
#include "cosmd/graph.hpp"
#include "cosmd/oracle.hpp"
#include "cosmd/recognize.hpp"
#include "cosmd/smd_directed.hpp"
#include "cosmd/smd_undirected.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitConnectivity = 2;
constexpr int kExitOracleMismatch = 3;

struct CommandError : std::runtime_error {
    int code;
    CommandError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(kExitParse, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --cotree accepts either an expression or a path to a file holding one
std::string cotree_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
    return arg;
}

std::string joined_labels(const std::vector<std::string>& labels,
                          const std::vector<int>& vertices) {
    std::string out;
    for (int v : vertices) {
        if (!out.empty()) out += ' ';
        out += labels[static_cast<std::size_t>(v)];
    }
    return out;
}

struct SmdInput {
    cosmd::CoTree tree;
    bool directed = false;
};

// Resolve a co-tree from --cotree or --edges (recognizing the edge list).
SmdInput resolve_input(const std::string& cotree_arg, const std::string& edges_arg,
                       bool force_directed) {
    if (cotree_arg.empty() && edges_arg.empty())
        throw CommandError(kExitParse, "one of --cotree / --edges is required");
    SmdInput in;
    if (!cotree_arg.empty()) {
        in.tree = cosmd::parse_cotree(cotree_text(cotree_arg));
        in.directed = force_directed || in.tree.contains_dir_join();
        return in;
    }
    auto g = cosmd::parse_edge_list(read_file(edges_arg));
    in.directed = g.kind == cosmd::GraphKind::directed;
    auto result = in.directed ? cosmd::recognize_directed(g) : cosmd::recognize_undirected(g);
    if (auto* nc = std::get_if<cosmd::NotCograph>(&result))
        throw CommandError(kExitParse, "input is not a co-graph: " + nc->reason);
    in.tree = std::move(std::get<cosmd::CoTree>(result));
    in.directed = in.directed || force_directed;
    return in;
}

int cmd_smd(const std::string& cotree_arg, const std::string& edges_arg, bool force_directed,
            bool as_json, bool oracle_check, const std::string& rule_name) {
    auto rule = rule_name == "as_printed" ? cosmd::DirectedRule::as_printed
                                          : cosmd::DirectedRule::prose_derived;
    auto in = resolve_input(cotree_arg, edges_arg, force_directed);

    int n = in.tree.leaf_count();
    int smd = 0;
    std::vector<int> resolving, witness;
    if (in.directed) {
        auto r = cosmd::smd_directed(in.tree, rule);
        smd = r.smd;
        resolving = std::move(r.resolving_set);
        witness = std::move(r.clique_witness);
    } else {
        auto r = cosmd::smd_undirected(in.tree);
        smd = r.smd;
        resolving = std::move(r.resolving_set);
        witness = std::move(r.clique_witness);
    }

    bool checked = false;
    if (oracle_check) {
        auto kind = in.directed ? cosmd::GraphKind::directed : cosmd::GraphKind::undirected;
        auto g = cosmd::evaluate_as(in.tree, kind);
        auto exact = cosmd::smd_exact(g);
        checked = true;
        if (exact.smd != smd || !cosmd::is_strong_resolving_set(g, resolving)) {
            std::cerr << "oracle mismatch: computed smd " << smd << " with set of size "
                      << resolving.size() << ", oracle says " << exact.smd << "\n";
            return kExitOracleMismatch;
        }
    }

    auto g_labels = [&] {
        auto spans = in.tree.leaf_labels_under(in.tree.root);
        std::vector<std::string> labels;
        labels.reserve(spans.size());
        for (auto l : spans) labels.push_back(in.tree.labels[l]);
        return labels;
    }();

    if (as_json) {
        json report;
        report["vertices"] = n;
        report["smd"] = smd;
        {
            std::vector<std::string> set;
            for (int v : resolving) set.push_back(g_labels[v]);
            std::sort(set.begin(), set.end());
            report["strong_resolving_set"] = set;
        }
        {
            std::vector<std::string> set;
            for (int v : witness) set.push_back(g_labels[v]);
            std::sort(set.begin(), set.end());
            report["clique_witness"] = set;
        }
        report["cotree"] = cosmd::serialize(in.tree);
        report["mode"] = in.directed ? "directed" : "undirected";
        report["oracle_checked"] = checked;
        if (in.directed) report["rule_variant"] = cosmd::to_string(rule);
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "mode: " << (in.directed ? "directed" : "undirected") << "\n";
        std::cout << "vertices: " << n << "\n";
        std::cout << "smd: " << smd << "\n";
        std::cout << "strong_resolving_set: " << joined_labels(g_labels, resolving) << "\n";
        std::cout << "clique_witness: " << joined_labels(g_labels, witness) << "\n";
        if (checked) std::cout << "oracle_checked: true\n";
    }
    return kExitOk;
}

int cmd_srg(const std::string& cotree_arg, const std::string& edges_arg, bool force_directed,
            bool as_dot, bool force_exact) {
    if (cotree_arg.empty() && edges_arg.empty())
        throw CommandError(kExitParse, "one of --cotree / --edges is required");
    cosmd::Graph g;
    if (!cotree_arg.empty()) {
        auto tree = cosmd::parse_cotree(cotree_text(cotree_arg));
        bool directed = force_directed || tree.contains_dir_join();
        g = cosmd::evaluate_as(tree, directed ? cosmd::GraphKind::directed
                                              : cosmd::GraphKind::undirected);
    } else {
        g = cosmd::parse_edge_list(read_file(edges_arg));
    }

    cosmd::Graph srg;
    if (g.kind == cosmd::GraphKind::undirected && !force_exact) {
        // the diameter-2 construction covers every connected co-graph
        try {
            srg = cosmd::srg_diameter2(g);
        } catch (const cosmd::connectivity_error&) {
            if (cosmd::connectivity(g) != cosmd::Connectivity::connected) throw;
            srg = cosmd::srg_exact(g);  // connected but diameter > 2
        }
    } else {
        srg = cosmd::srg_exact(g);
    }

    if (as_dot) {
        std::cout << "graph G {\n";
        for (const auto& label : srg.labels) std::cout << "  " << label << ";\n";
        for (int u = 0; u < srg.n(); ++u)
            for (int v : srg.neighbors(u))
                if (u < v) std::cout << "  " << srg.labels[u] << " -- " << srg.labels[v] << ";\n";
        std::cout << "}\n";
    } else {
        for (int u = 0; u < srg.n(); ++u)
            for (int v : srg.neighbors(u))
                if (u < v) std::cout << srg.labels[u] << " " << srg.labels[v] << "\n";
    }
    return kExitOk;
}

int cmd_recognize(const std::string& edges_arg) {
    auto g = cosmd::parse_edge_list(read_file(edges_arg));
    auto result = g.kind == cosmd::GraphKind::directed ? cosmd::recognize_directed(g)
                                                       : cosmd::recognize_undirected(g);
    if (auto* nc = std::get_if<cosmd::NotCograph>(&result))
        throw CommandError(kExitParse, "not a co-graph: " + nc->reason);
    std::cout << cosmd::serialize(std::get<cosmd::CoTree>(result)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& edges_arg, const std::string& set_arg) {
    auto g = cosmd::parse_edge_list(read_file(edges_arg));
    std::vector<int> set;
    std::stringstream ss(set_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) set.push_back(g.index_of(item));
    }
    std::pair<int, int> violation;
    if (cosmd::is_strong_resolving_set(g, set, &violation)) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid: pair (" << g.labels[violation.first] << ", "
                  << g.labels[violation.second] << ") is not strongly resolved\n";
    }
    return kExitOk;
}

int cmd_gen(int leaves, std::uint64_t seed, bool directed) {
    cosmd::GenConfig cfg;
    cfg.leaves = leaves;
    cfg.seed = seed;
    cfg.mode = directed ? cosmd::GenMode::directed_join_root : cosmd::GenMode::undirected;
    std::cout << cosmd::serialize(cosmd::random_cotree(cfg)) << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& sizes_arg, std::uint64_t seed, bool directed, int reps) {
    std::vector<long long> sizes;
    std::stringstream ss(sizes_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long long v = std::stoll(item);
        if (v < 1) throw CommandError(kExitParse, "sizes must be positive");
        sizes.push_back(v);
    }

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    std::cout << "# seed=" << seed << " reps=" << reps
              << " mode=" << (directed ? "directed" : "undirected") << "\n";
    std::cout << "# size generate_ms smd_ms\n";
    for (long long size : sizes) {
        cosmd::GenConfig cfg;
        cfg.leaves = static_cast<int>(size);
        cfg.seed = seed;
        cfg.mode = directed ? cosmd::GenMode::directed_join_root : cosmd::GenMode::undirected;

        auto t0 = clock::now();
        auto tree = cosmd::random_cotree(cfg);
        double gen_ms = ms_since(t0);

        double best = -1;
        int result = -1;
        for (int rep = 0; rep < reps; ++rep) {
            auto t1 = clock::now();
            int smd = directed ? cosmd::smd_directed(tree).smd : cosmd::smd_undirected(tree).smd;
            double elapsed = ms_since(t1);
            if (best < 0 || elapsed < best) best = elapsed;
            result = smd;
        }
        std::cout << size << " " << gen_ms << " " << best << "  # smd=" << result << "\n";
    }
    return kExitOk;
}

int cmd_discrepancy(int max_leaves, std::uint64_t seed, int count, int fuzz_leaves,
                    int list_limit, bool as_json) {
    cosmd::DiscrepancyConfig cfg;
    cfg.exhaustive_max_leaves = max_leaves;
    cfg.seed = seed;
    cfg.fuzz_count = count;
    cfg.fuzz_max_leaves = fuzz_leaves;
    cfg.list_limit = list_limit;
    auto report = cosmd::run_discrepancy(cfg);

    if (as_json) {
        json j;
        j["trees_checked"] = report.trees_checked;
        j["separating_instance"] = {{"cotree", cosmd::kSeparatingInstance},
                                    {"oracle_smd", report.separating_oracle_smd},
                                    {"prose_derived_smd", report.separating_prose_smd},
                                    {"as_printed_smd", report.separating_printed_smd}};
        for (const auto* outcome : {&report.prose_derived, &report.as_printed}) {
            json v;
            v["mismatches"] = outcome->mismatches;
            v["counterexamples"] = json::array();
            for (const auto& ce : outcome->examples)
                v["counterexamples"].push_back({{"cotree", ce.cotree},
                                                {"leaves", ce.leaves},
                                                {"dp_smd", ce.dp_smd},
                                                {"oracle_smd", ce.oracle_smd}});
            j[cosmd::to_string(outcome->rule)] = v;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "checked " << report.trees_checked << " join-rooted directed co-trees"
              << " (exhaustive <= " << cfg.exhaustive_max_leaves << " leaves, " << cfg.fuzz_count
              << " fuzzed, seed " << cfg.seed << ")\n";
    for (const auto* outcome : {&report.prose_derived, &report.as_printed}) {
        std::cout << "variant " << cosmd::to_string(outcome->rule) << ": "
                  << outcome->mismatches << " mismatches\n";
        for (const auto& ce : outcome->examples)
            std::cout << "  counterexample: " << ce.cotree << "  dp_smd=" << ce.dp_smd
                      << " oracle_smd=" << ce.oracle_smd << "\n";
    }
    std::cout << "separating instance " << cosmd::kSeparatingInstance << ": oracle_smd="
              << report.separating_oracle_smd << " prose_derived_smd="
              << report.separating_prose_smd << " as_printed_smd="
              << report.separating_printed_smd << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong metric dimension of undirected and directed co-graphs"};
    app.require_subcommand(1);

    // smd
    auto* smd = app.add_subcommand("smd", "compute the strong metric dimension");
    std::string smd_cotree, smd_edges, smd_rule = "prose_derived";
    bool smd_json = false, smd_oracle = false, smd_directed = false;
    auto* smd_ct = smd->add_option("--cotree", smd_cotree, "co-tree expression or file");
    auto* smd_ed = smd->add_option("--edges", smd_edges, "edge-list file (recognized first)");
    smd_ct->excludes(smd_ed);
    smd->add_flag("--directed", smd_directed, "treat a dir-join-free tree as directed");
    smd->add_flag("--json", smd_json, "emit a JSON report");
    smd->add_flag("--oracle-check", smd_oracle, "cross-check against the exact oracle (n <= 24)");
    smd->add_option("--rule", smd_rule, "directed composition rule variant")
        ->check(CLI::IsMember({"prose_derived", "as_printed"}));

    // srg
    auto* srg = app.add_subcommand("srg", "emit the strong resolving graph");
    std::string srg_cotree, srg_edges;
    bool srg_dot = false, srg_exact_flag = false, srg_directed = false;
    auto* srg_ct = srg->add_option("--cotree", srg_cotree, "co-tree expression or file");
    auto* srg_ed = srg->add_option("--edges", srg_edges, "edge-list file");
    srg_ct->excludes(srg_ed);
    srg->add_flag("--directed", srg_directed, "treat a dir-join-free tree as directed");
    srg->add_flag("--dot", srg_dot, "DOT output");
    srg->add_flag("--exact", srg_exact_flag, "force the definition-exact oracle path (n <= 24)");

    // recognize
    auto* rec = app.add_subcommand("recognize", "decompose an edge list into a co-tree");
    std::string rec_edges;
    rec->add_option("--edges", rec_edges, "edge-list file")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "check a strong resolving set (n <= 24)");
    std::string ver_edges, ver_set;
    ver->add_option("--edges", ver_edges, "edge-list file")->required();
    ver->add_option("--set", ver_set, "comma-separated vertex labels")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random co-tree");
    int gen_leaves = 1;
    std::uint64_t gen_seed = 0;
    bool gen_directed = false;
    gen->add_option("--leaves", gen_leaves, "leaf count")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_flag("--directed", gen_directed, "directed tree with a join root");

    // bench
    auto* bench = app.add_subcommand("bench", "time the co-tree DP");
    std::string bench_sizes;
    std::uint64_t bench_seed = 0;
    bool bench_directed = false;
    int bench_reps = 5;
    bench->add_option("--sizes", bench_sizes, "comma-separated leaf counts")->required();
    bench->add_option("--seed", bench_seed, "PRNG seed");
    bench->add_flag("--directed", bench_directed, "benchmark the directed DP");
    bench->add_option("--reps", bench_reps, "repetitions per size (best is reported)");

    // discrepancy
    auto* dis = app.add_subcommand("discrepancy", "arbitrate the rule variants against the oracle");
    int dis_max_leaves = 6, dis_count = 200, dis_fuzz_leaves = 12, dis_list = 10;
    std::uint64_t dis_seed = 1;
    bool dis_json = false;
    dis->add_option("--max-leaves", dis_max_leaves, "exhaustive enumeration bound");
    dis->add_option("--seed", dis_seed, "fuzz seed");
    dis->add_option("--count", dis_count, "fuzzed tree count");
    dis->add_option("--fuzz-leaves", dis_fuzz_leaves, "fuzzed tree leaf bound");
    dis->add_option("--list", dis_list, "counterexamples listed per variant");
    dis->add_flag("--json", dis_json, "emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*smd) return cmd_smd(smd_cotree, smd_edges, smd_directed, smd_json, smd_oracle,
                                 smd_rule);
        if (*srg) return cmd_srg(srg_cotree, srg_edges, srg_directed, srg_dot, srg_exact_flag);
        if (*rec) return cmd_recognize(rec_edges);
        if (*ver) return cmd_verify(ver_edges, ver_set);
        if (*gen) return cmd_gen(gen_leaves, gen_seed, gen_directed);
        if (*bench) return cmd_bench(bench_sizes, bench_seed, bench_directed, bench_reps);
        if (*dis) return cmd_discrepancy(dis_max_leaves, dis_seed, dis_count, dis_fuzz_leaves,
                                         dis_list, dis_json);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const cosmd::connectivity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConnectivity;
    } catch (const cosmd::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
