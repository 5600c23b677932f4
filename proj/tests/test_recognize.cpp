#include <doctest.h>

#include <variant>

#include "cosmd/generator.hpp"
#include "cosmd/recognize.hpp"

using namespace cosmd;

namespace {

Graph path4() {
    return build_graph(GraphKind::undirected, {"a", "b", "c", "d"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

// independent check: does g contain an induced 4-vertex path?
bool has_induced_p4(const Graph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, d) &&
                        !g.has_arc(a, c) && !g.has_arc(a, d) && !g.has_arc(b, d))
                        return true;
                }
    return false;
}

}  // namespace

TEST_CASE("P4 is rejected with a witness") {
    auto result = recognize_undirected(path4());
    auto* nc = std::get_if<NotCograph>(&result);
    REQUIRE(nc != nullptr);
    REQUIRE(nc->p4.size() == 4);
    // the reported quadruple really is an induced path
    auto g = path4();
    int a = g.index_of(nc->p4[0]), b = g.index_of(nc->p4[1]);
    int c = g.index_of(nc->p4[2]), d = g.index_of(nc->p4[3]);
    CHECK(g.has_arc(a, b));
    CHECK(g.has_arc(b, c));
    CHECK(g.has_arc(c, d));
    CHECK_FALSE(g.has_arc(a, c));
    CHECK_FALSE(g.has_arc(a, d));
    CHECK_FALSE(g.has_arc(b, d));
}

TEST_CASE("P3 decomposes as a join over a union") {
    auto g = evaluate(parse_cotree("J(U(a,b),c)"));
    auto result = recognize_undirected(g);
    auto* tree = std::get_if<CoTree>(&result);
    REQUIRE(tree != nullptr);
    CHECK(tree->node(tree->root).kind == NodeKind::op_join);
    CHECK(graphs_equal_labelled(evaluate(*tree), g));
}

TEST_CASE("undirected recognition round-trips on random co-graphs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GenConfig cfg;
        cfg.leaves = 1 + static_cast<int>(seed % 14);
        cfg.seed = seed * 13 + 5;
        cfg.mode = GenMode::undirected;
        auto g = evaluate_as(random_cotree(cfg), GraphKind::undirected);
        auto result = recognize_undirected(g);
        auto* tree = std::get_if<CoTree>(&result);
        REQUIRE(tree != nullptr);
        REQUIRE(graphs_equal_labelled(evaluate_as(*tree, GraphKind::undirected), g));
    }
}

TEST_CASE("NotCograph exactly when an induced P4 exists") {
    SplitMix64 rng(20240817);
    for (int it = 0; it < 400; ++it) {
        int n = 2 + static_cast<int>(rng.below(8));  // up to 9 vertices
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2)) edges.emplace_back(labels[u], labels[v]);
        auto g = build_graph(GraphKind::undirected, labels, edges);
        bool rejected = std::holds_alternative<NotCograph>(recognize_undirected(g));
        CHECK(rejected == has_induced_p4(g));
    }
}

TEST_CASE("directed 3-cycle is rejected") {
    auto g = build_graph(GraphKind::directed, {"a", "b", "c"},
                         {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(std::holds_alternative<NotCograph>(recognize_directed(g)));
}

TEST_CASE("directed recognition finds the join/dir_join split") {
    auto g = evaluate_as(parse_cotree("J(D(a,b),c)"), GraphKind::directed);
    auto result = recognize_directed(g);
    auto* tree = std::get_if<CoTree>(&result);
    REQUIRE(tree != nullptr);
    CHECK(tree->node(tree->root).kind == NodeKind::op_join);
    CHECK(graphs_equal_labelled(evaluate_as(*tree, GraphKind::directed), g));

    auto k2 = build_graph(GraphKind::directed, {"a", "b"}, {{"a", "b"}, {"b", "a"}});
    auto r2 = recognize_directed(k2);
    auto* t2 = std::get_if<CoTree>(&r2);
    REQUIRE(t2 != nullptr);
    CHECK(serialize(*t2) == "J(a,b)");

    auto arrow = build_graph(GraphKind::directed, {"a", "b"}, {{"a", "b"}});
    auto r3 = recognize_directed(arrow);
    auto* t3 = std::get_if<CoTree>(&r3);
    REQUIRE(t3 != nullptr);
    CHECK(serialize(*t3) == "D(a,b)");
}

TEST_CASE("directed recognition round-trips on random co-graphs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GenConfig cfg;
        cfg.leaves = 1 + static_cast<int>(seed % 12);
        cfg.seed = seed * 101 + 7;
        cfg.mode = GenMode::directed_join_root;
        auto g = evaluate_as(random_cotree(cfg), GraphKind::directed);
        auto result = recognize_directed(g);
        auto* tree = std::get_if<CoTree>(&result);
        REQUIRE(tree != nullptr);
        REQUIRE(graphs_equal_labelled(evaluate_as(*tree, GraphKind::directed), g));
    }
}

TEST_CASE("directed recognition handles every root kind (exhaustive, small)") {
    for (int leaves = 1; leaves <= 5; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            auto g = evaluate_as(t, GraphKind::directed);
            auto result = recognize_directed(g);
            auto* tree = std::get_if<CoTree>(&result);
            REQUIRE(tree != nullptr);
            REQUIRE(graphs_equal_labelled(evaluate_as(*tree, GraphKind::directed), g));
        });
    }
}

TEST_CASE("recognizers check the graph kind") {
    CHECK_THROWS_AS(recognize_undirected(build_graph(GraphKind::directed, {"a"}, {})),
                    input_error);
    CHECK_THROWS_AS(recognize_directed(build_graph(GraphKind::undirected, {"a"}, {})),
                    input_error);
}
