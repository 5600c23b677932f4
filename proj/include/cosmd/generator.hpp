#pragma once

#include <cstdint>
#include <functional>

#include "cosmd/cotree.hpp"

namespace cosmd {

/// Small deterministic 64-bit generator (splitmix64). Seeds are recorded
/// in all outputs; counterexamples are replayed by serialized tree, not
/// by stream portability.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GenMode { undirected, directed_join_root };

struct KindWeights {
    double wt_union = 1.0;
    double wt_join = 1.0;
    double wt_dir_join = 1.0;  // ignored in undirected mode
};

struct GenConfig {
    int leaves = 1;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::undirected;
    KindWeights weights;
};

/// Seed-deterministic random co-tree with exactly cfg.leaves leaves,
/// labelled v0..v{n-1} in leaf order. Binary shape by uniform split of
/// leaf counts; internal kinds drawn from the weights; in
/// directed_join_root mode the root kind is pinned to join (for 2+
/// leaves), making the evaluated digraph strongly connected.
CoTree random_cotree(const GenConfig& cfg);

/// Every binary tree shape with exactly `leaves` leaves crossed with
/// every internal-kind assignment, leaf labels a, b, c, ... Same-kind
/// nestings are deliberately kept (they exercise canonicalization).
/// Rejects leaves > 8.
void enumerate_cotrees(int leaves, GenMode mode,
                       const std::function<void(const CoTree&)>& yield);

}  // namespace cosmd
