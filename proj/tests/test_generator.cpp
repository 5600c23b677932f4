#include <doctest.h>

#include <chrono>
#include <set>

#include "cosmd/generator.hpp"
#include "cosmd/graph.hpp"

using namespace cosmd;

TEST_CASE("random_cotree basics") {
    GenConfig cfg;
    cfg.leaves = 1;
    cfg.seed = 123;
    CHECK(serialize(random_cotree(cfg)) == "v0");

    cfg.leaves = 17;
    cfg.mode = GenMode::directed_join_root;
    auto a = random_cotree(cfg);
    auto b = random_cotree(cfg);
    CHECK(serialize(a) == serialize(b));  // determinism, bit-exact
    CHECK(a.leaf_count() == 17);
    CHECK(a.node(a.root).kind == NodeKind::op_join);

    cfg.leaves = 0;
    CHECK_THROWS_AS(random_cotree(cfg), input_error);
}

TEST_CASE("leaf count always matches the config") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg;
        cfg.leaves = 1 + static_cast<int>(seed % 40);
        cfg.seed = seed;
        cfg.mode = seed % 2 ? GenMode::directed_join_root : GenMode::undirected;
        auto t = random_cotree(cfg);
        CHECK(t.leaf_count() == cfg.leaves);
        auto leaves = t.leaf_labels_under(t.root);
        CHECK(static_cast<int>(leaves.size()) == cfg.leaves);
    }
}

TEST_CASE("undirected mode never emits dir_join") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.leaves = 2 + static_cast<int>(seed % 20);
        cfg.seed = seed * 5 + 1;
        cfg.mode = GenMode::undirected;
        CHECK_FALSE(random_cotree(cfg).contains_dir_join());
    }
}

TEST_CASE("directed_join_root trees evaluate strongly connected") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.leaves = 2 + static_cast<int>(seed % 14);
        cfg.seed = seed * 11 + 3;
        cfg.mode = GenMode::directed_join_root;
        auto g = evaluate_as(random_cotree(cfg), GraphKind::directed);
        CHECK(connectivity(g) == Connectivity::strongly_connected);
    }
}

TEST_CASE("enumerate_cotrees covers shapes times kinds") {
    std::set<std::string> two;
    enumerate_cotrees(2, GenMode::undirected, [&](const CoTree& t) {
        two.insert(serialize(t));
    });
    CHECK(two == std::set<std::string>{"U(a,b)", "J(a,b)"});

    std::set<std::string> two_dir;
    enumerate_cotrees(2, GenMode::directed_join_root,
                      [&](const CoTree& t) { two_dir.insert(serialize(t)); });
    CHECK(two_dir == std::set<std::string>{"U(a,b)", "J(a,b)", "D(a,b)"});

    int count = 0;
    enumerate_cotrees(3, GenMode::directed_join_root, [&](const CoTree&) { ++count; });
    CHECK(count == 18);  // 2 shapes x 3^2 kind assignments

    int single = 0;
    enumerate_cotrees(1, GenMode::undirected, [&](const CoTree& t) {
        ++single;
        CHECK(serialize(t) == "a");
    });
    CHECK(single == 1);

    CHECK_THROWS_AS(enumerate_cotrees(9, GenMode::undirected, [](const CoTree&) {}),
                    input_error);
}

TEST_CASE("weights must be positive") {
    GenConfig cfg;
    cfg.leaves = 5;
    cfg.weights.wt_union = 0.0;
    CHECK_THROWS_AS(random_cotree(cfg), input_error);
}

TEST_CASE("a million-leaf tree generates and serializes quickly") {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    GenConfig cfg;
    cfg.leaves = 1000000;
    cfg.seed = 7;
    cfg.mode = GenMode::directed_join_root;
    auto t = random_cotree(cfg);
    auto s = serialize(t);
    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    CHECK(t.leaf_count() == 1000000);
    CHECK(s.size() > 1000000u);
    CHECK(seconds < 5.0);
}
