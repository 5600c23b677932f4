#pragma once

#include <vector>

#include "cosmd/cotree.hpp"
#include "cosmd/graph.hpp"

namespace cosmd {

/// Result of the bottom-up maximum-clique pass that counts sibling leaf
/// children of a join node only once (collapsing true twins).
struct TwinlessCliqueResult {
    int size = 0;
    std::vector<int> witness;  // leaf-order vertex indices, ascending
};

/// Bottom-up over a canonical undirected co-tree: a leaf scores 1, a
/// union node the maximum over its children (first maximiser wins), a
/// join node the sum over its non-leaf children plus 1 if it has any
/// leaf child (the first leaf child is the witness representative).
/// Rejects trees containing dir_join nodes.
TwinlessCliqueResult max_twinless_clique(const CanonicalForm& t);

struct SmdResult {
    int n = 0;
    int smd = 0;
    std::vector<int> resolving_set;   // vertex indices, ascending
    std::vector<int> clique_witness;  // complement of resolving_set
    /// Per-node provenance, indexed like the canonical tree's arena:
    /// winning child ordinal at union nodes, -1 elsewhere.
    std::vector<std::int32_t> provenance;
};

/// Strong metric dimension of the connected undirected co-graph described
/// by `t`: n minus the twinless-clique size, with the witness complement
/// as a minimum strong resolving set. Disconnected inputs (union root)
/// are rejected; trees with dir_join nodes are rejected.
SmdResult smd_undirected(const CoTree& t);

/// Strong resolving graph of a connected undirected graph of diameter at
/// most 2: complement edges plus all true-twin pairs. Inputs of larger
/// diameter (or disconnected ones) are rejected.
Graph srg_diameter2(const Graph& g);

}  // namespace cosmd
