#include <doctest.h>

#include <algorithm>

#include "cosmd/discrepancy.hpp"
#include "cosmd/generator.hpp"
#include "cosmd/oracle.hpp"
#include "cosmd/smd_directed.hpp"

using namespace cosmd;

namespace {

// complement of the strong resolving graph, restricted to the vertices of
// a (possibly not strongly connected) subtree graph: embed under a join
// with one fresh vertex, which changes nothing inside
std::vector<std::vector<char>> co_srg_within(const CoTree& t) {
    CoTree wrapped = t;
    NodeId leaf = static_cast<NodeId>(wrapped.nodes.size());
    wrapped.nodes.push_back(
        {NodeKind::leaf, static_cast<std::int32_t>(wrapped.labels.size()), {}});
    wrapped.labels.push_back("__z");
    NodeId join = static_cast<NodeId>(wrapped.nodes.size());
    wrapped.nodes.push_back({NodeKind::op_join, -1, {wrapped.root, leaf}});
    wrapped.root = join;

    auto g = evaluate_as(wrapped, GraphKind::directed);
    auto srg = srg_exact(g, OracleLimits{26});
    int n = t.leaf_count();
    std::vector<std::vector<char>> co(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !srg.has_arc(u, v)) co[u][v] = 1;
    return co;
}

int brute_max_clique(const std::vector<std::vector<char>>& adj, const std::vector<char>& allowed) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(mask & (1u << u))) continue;
            if (!allowed[u]) {
                ok = false;
                break;
            }
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask & (1u << v)) && !adj[u][v]) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("clique_vector base cases") {
    auto leaf = clique_vector(binarize(parse_cotree("x")));
    CHECK(leaf.m == 1);
    CHECK(leaf.s == 0);
    CHECK(leaf.i == 0);
    CHECK(leaf.o == 0);
    CHECK(leaf.M == std::vector<int>{0});

    auto d = clique_vector(binarize(parse_cotree("D(a,b)")));
    CHECK(d.m == 1);
    CHECK(d.s == 0);
    CHECK(d.i == 1);
    CHECK(d.o == 1);
    CHECK(d.I == std::vector<int>{1});  // b
    CHECK(d.O == std::vector<int>{0});  // a

    CHECK_THROWS_AS(clique_vector(parse_cotree("J(a,b,c)")), input_error);  // not binary
}

TEST_CASE("smd_directed small cases") {
    CHECK(smd_directed(parse_cotree("x")).smd == 0);
    CHECK(smd_directed(parse_cotree("J(a,b)")).smd == 1);

    auto r = smd_directed(parse_cotree("J(D(a,b),c)"));
    CHECK(r.n == 3);
    CHECK(r.smd == 2);
    CHECK(r.clique_witness.size() == 1);

    auto c4 = smd_directed(parse_cotree("J(U(a,b),U(c,d))"));
    CHECK(c4.smd == 2);

    // oracle agreement on those
    auto g = evaluate_as(parse_cotree("J(D(a,b),c)"), GraphKind::directed);
    CHECK(smd_exact(g).smd == 2);
}

TEST_CASE("smd_directed rejects non-join roots by name") {
    CHECK_THROWS_WITH_AS(smd_directed(parse_cotree("U(a,b)")), doctest::Contains("union"),
                         connectivity_error);
    CHECK_THROWS_WITH_AS(smd_directed(parse_cotree("D(a,b)")), doctest::Contains("dir_join"),
                         connectivity_error);
    // a join buried under a dir_join chain is still rejected
    CHECK_THROWS_AS(smd_directed(parse_cotree("D(J(a,b),c)")), connectivity_error);
}

TEST_CASE("the separating instance: prose_derived 3, as_printed 4, oracle 3") {
    auto t = parse_cotree(kSeparatingInstance);
    auto prose = smd_directed(t, DirectedRule::prose_derived);
    auto printed = smd_directed(t, DirectedRule::as_printed);
    auto g = evaluate_as(t, GraphKind::directed);
    auto exact = smd_exact(g);
    CHECK(prose.smd == 3);
    CHECK(printed.smd == 4);
    CHECK(exact.smd == 3);
    CHECK(is_strong_resolving_set(g, prose.resolving_set));
}

TEST_CASE("mixed solitary/in cliques need the si value") {
    // the published four-value recurrences lose this one in both variants:
    // {a, d} mixes a solitary-only and an in-only vertex and becomes
    // s-eligible after the directed join with e
    auto t = parse_cotree("J(D(J(U(a,b),D(c,d)),e),f)");
    auto g = evaluate_as(t, GraphKind::directed);
    CHECK(smd_exact(g).smd == 3);
    CHECK(smd_directed(t, DirectedRule::prose_derived).smd == 3);
    CHECK(smd_directed(t, DirectedRule::as_printed).smd == 4);
}

TEST_CASE("cross_edge_predicate cases") {
    VertexClass none{};
    VertexClass solitary{true, false, false, false};
    VertexClass in_only{false, true, false, false};
    VertexClass out_only{false, false, true, false};
    VertexClass in_out{false, true, true, true};

    CHECK(cross_edge_predicate(solitary, none));
    CHECK(cross_edge_predicate(none, solitary));
    CHECK_FALSE(cross_edge_predicate(out_only, in_only));
    CHECK_FALSE(cross_edge_predicate(none, none));
    CHECK(cross_edge_predicate(in_only, in_only));
    CHECK(cross_edge_predicate(out_only, out_only));
    CHECK(cross_edge_predicate(in_out, out_only));
    CHECK(cross_edge_predicate(none, in_out));
}

TEST_CASE("class transitions under the three compositions (exhaustive, small)") {
    for (int leaves = 2; leaves <= 5; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            const auto& root = t.node(t.root);
            if (root.kind == NodeKind::leaf) return;
            auto whole = evaluate_as(t, GraphKind::directed);

            CoTree left_tree = t, right_tree = t;
            left_tree.root = root.children[0];
            right_tree.root = root.children[1];
            auto gl = evaluate_as(left_tree, GraphKind::directed);
            auto gr = evaluate_as(right_tree, GraphKind::directed);
            int nl = gl.n();

            for (int v = 0; v < whole.n(); ++v) {
                bool from_left = v < nl;
                auto inner = from_left ? classify_vertex(gl, v) : classify_vertex(gr, v - nl);
                auto outer = classify_vertex(whole, v);
                switch (root.kind) {
                    case NodeKind::op_union:
                        CHECK(outer.solitary);
                        CHECK(outer.in_vertex == inner.in_vertex);
                        CHECK(outer.out_vertex == inner.out_vertex);
                        break;
                    case NodeKind::op_dir_join:
                        CHECK(outer.solitary == inner.solitary);
                        if (from_left) {
                            CHECK(outer.out_vertex);
                            CHECK(outer.in_vertex == inner.in_vertex);
                            CHECK(outer.in_out == inner.in_vertex);
                        } else {
                            CHECK(outer.in_vertex);
                            CHECK(outer.out_vertex == inner.out_vertex);
                            CHECK(outer.in_out == inner.out_vertex);
                        }
                        break;
                    case NodeKind::op_join:
                        CHECK(outer.solitary == inner.solitary);
                        CHECK(outer.in_vertex == inner.in_vertex);
                        CHECK(outer.out_vertex == inner.out_vertex);
                        break;
                    case NodeKind::leaf:
                        break;
                }
            }
        });
    }
}

TEST_CASE("every clique value matches a brute-force class-restricted clique") {
    // all six values, on every subtree root kind, against the definition
    for (int leaves = 1; leaves <= 5; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            auto vec = clique_vector(binarize(t));
            auto co = co_srg_within(t);
            auto g = evaluate_as(t, GraphKind::directed);
            int n = g.n();
            std::vector<VertexClass> cls(n);
            for (int v = 0; v < n; ++v) cls[v] = classify_vertex(g, v);

            std::vector<char> all(n, 1), s_ok(n), i_ok(n), o_ok(n), si_ok(n), so_ok(n);
            for (int v = 0; v < n; ++v) {
                s_ok[v] = cls[v].solitary || cls[v].in_out;
                i_ok[v] = cls[v].in_vertex;
                o_ok[v] = cls[v].out_vertex;
                si_ok[v] = cls[v].solitary || cls[v].in_vertex;
                so_ok[v] = cls[v].solitary || cls[v].out_vertex;
            }
            REQUIRE(vec.m == brute_max_clique(co, all));
            REQUIRE(vec.s == brute_max_clique(co, s_ok));
            REQUIRE(vec.i == brute_max_clique(co, i_ok));
            REQUIRE(vec.o == brute_max_clique(co, o_ok));
            REQUIRE(vec.si == brute_max_clique(co, si_ok));
            REQUIRE(vec.so == brute_max_clique(co, so_ok));

            // witnesses: right size, right classes, pairwise co-srg adjacent
            auto check_witness = [&](const std::vector<int>& w, int size,
                                     const std::vector<char>& ok) {
                REQUIRE(static_cast<int>(w.size()) == size);
                for (std::size_t x = 0; x < w.size(); ++x) {
                    REQUIRE(ok[w[x]]);
                    for (std::size_t y = x + 1; y < w.size(); ++y) REQUIRE(co[w[x]][w[y]]);
                }
            };
            check_witness(vec.M, vec.m, all);
            check_witness(vec.S, vec.s, s_ok);
            check_witness(vec.I, vec.i, i_ok);
            check_witness(vec.O, vec.o, o_ok);
            check_witness(vec.SI, vec.si, si_ok);
            check_witness(vec.SO, vec.so, so_ok);
        });
    }
}

TEST_CASE("no co-srg edge crosses a union or dir_join composition") {
    for (int leaves = 2; leaves <= 5; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            const auto& root = t.node(t.root);
            if (root.kind != NodeKind::op_union && root.kind != NodeKind::op_dir_join) return;
            CoTree left_tree = t;
            left_tree.root = root.children[0];
            int nl = left_tree.leaf_labels_under(left_tree.root).size();
            auto co = co_srg_within(t);
            int n = t.leaf_count();
            for (int u = 0; u < nl; ++u)
                for (int v = nl; v < n; ++v) REQUIRE_FALSE(co[u][v]);
        });
    }
}

TEST_CASE("co-srg cross edges at a join match the class predicate") {
    for (int leaves = 2; leaves <= 6; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            const auto& root = t.node(t.root);
            if (root.kind != NodeKind::op_join) return;
            CoTree left_tree = t, right_tree = t;
            left_tree.root = root.children[0];
            right_tree.root = root.children[1];
            auto gl = evaluate_as(left_tree, GraphKind::directed);
            auto gr = evaluate_as(right_tree, GraphKind::directed);
            int nl = gl.n();

            auto g = evaluate_as(t, GraphKind::directed);
            auto srg = srg_exact(g);
            for (int u = 0; u < nl; ++u)
                for (int v = 0; v < gr.n(); ++v) {
                    bool co_edge = !srg.has_arc(u, nl + v);
                    bool predicted = cross_edge_predicate(classify_vertex(gl, u),
                                                          classify_vertex(gr, v));
                    REQUIRE(co_edge == predicted);
                }
        });
    }
}

TEST_CASE("prose_derived equals the oracle exhaustively (small) with sound witnesses") {
    for (int leaves = 2; leaves <= 6; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            if (t.node(t.root).kind != NodeKind::op_join) return;
            auto g = evaluate_as(t, GraphKind::directed);
            auto dp = smd_directed(t);
            auto exact = smd_exact(g);
            REQUIRE(dp.smd == exact.smd);
            REQUIRE(static_cast<int>(dp.resolving_set.size()) == dp.smd);
            REQUIRE(is_strong_resolving_set(g, dp.resolving_set));
            // the clique witness is independent in the srg
            auto srg = srg_exact(g);
            for (std::size_t x = 0; x < dp.clique_witness.size(); ++x)
                for (std::size_t y = x + 1; y < dp.clique_witness.size(); ++y)
                    REQUIRE_FALSE(srg.has_arc(dp.clique_witness[x], dp.clique_witness[y]));
            // sanity bounds
            if (g.n() >= 2) {
                REQUIRE(dp.smd >= 1);
                REQUIRE(dp.smd <= g.n() - 1);
            }
        });
    }
}

TEST_CASE("rule trace names the winning maximand") {
    auto t = binarize(parse_cotree("J(U(a,b),U(c,d))"));
    auto r = smd_directed(parse_cotree("J(U(a,b),U(c,d))"));
    REQUIRE(r.rule_trace.size() == t.nodes.size());
    CHECK(r.rule_trace[t.root] == MProvenance::ml_plus_sr);  // tie resolves in listing order
    CHECK(to_string(MProvenance::ml_plus_sr) == "m_l+s_r");
}

TEST_CASE("discrepancy run arbitrates for prose_derived") {
    DiscrepancyConfig cfg;
    cfg.exhaustive_max_leaves = 6;
    cfg.fuzz_count = 50;
    cfg.fuzz_max_leaves = 10;
    cfg.seed = 42;
    auto report = run_discrepancy(cfg);
    CHECK(report.prose_derived.mismatches == 0);
    CHECK(report.as_printed.mismatches > 0);
    CHECK(report.separating_oracle_smd == 3);
    CHECK(report.separating_prose_smd == 3);
    CHECK(report.separating_printed_smd == 4);
    bool listed = std::any_of(
        report.as_printed.examples.begin(), report.as_printed.examples.end(),
        [](const Counterexample& ce) { return ce.cotree == kSeparatingInstance; });
    CHECK(listed);
}
