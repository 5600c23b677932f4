#pragma once

#include <cstdint>
#include <vector>

#include "cosmd/graph.hpp"

namespace cosmd {

/// The oracle is definition-level ground truth and refuses rather than
/// approximates: inputs beyond max_vertices are rejected.
struct OracleLimits {
    int max_vertices = 24;
};

/// Maximal-distance relation. Directed graphs store the ordered relation
/// "u mutually maximally distant to v" (not symmetric in general);
/// undirected graphs store the symmetric mutual relation.
struct MmdRelation {
    bool directed = false;
    int n = 0;
    std::vector<std::uint8_t> mat;  // row-major

    bool at(int u, int v) const { return mat[static_cast<std::size_t>(u) * n + v] != 0; }
};

/// Undirected: MMD[u][v] iff no neighbour of u is farther from v and no
/// neighbour of v is farther from u. Directed: MMDT[u][v] iff no
/// in-neighbour of u is farther from v and no out-neighbour of v is
/// farther from u (distances follow arcs). Requires (strong)
/// connectivity.
MmdRelation mmd_relation(const Graph& g, OracleLimits limits = {});

/// Strong resolving graph: undirected graph on V(g) with an edge {u,v}
/// iff the pair is mutually maximally distant (either order, when
/// directed).
Graph srg_exact(const Graph& g, OracleLimits limits = {});

struct CoverResult {
    int size = 0;
    std::vector<int> cover;  // ascending vertex indices
};

/// Exact minimum vertex cover by branch-and-bound over complement
/// cliques. Deterministic witness: among minimum covers, the one with the
/// smallest bitmask (bit v = vertex v).
CoverResult min_vertex_cover_exact(const Graph& h, OracleLimits limits = {});

struct ExactSmd {
    int smd = 0;
    std::vector<int> resolving_set;  // ascending vertex indices
};

/// tau(srg_exact(g)) with the cover as the strong resolving set. The
/// returned set is re-checked against is_strong_resolving_set before
/// being handed out.
ExactSmd smd_exact(const Graph& g, OracleLimits limits = {});

/// Whether w strongly resolves the (ordered, when directed) pair u, v:
/// v lies on a shortest u-w path or u lies on a shortest w-v path,
/// evaluated through the distance equalities.
bool strongly_resolves(const Graph& g, int w, int u, int v);

/// Same, with distances precomputed.
bool strongly_resolves(const Graph& g, const DistanceMatrix& dist, int w, int u, int v);

/// Every ordered pair of distinct vertices must be strongly resolved by
/// some member of the set (unordered pairs for undirected graphs, both
/// orders for directed ones — covered by quantifying over ordered
/// pairs). Requires (strong) connectivity.
bool is_strong_resolving_set(const Graph& g, const std::vector<int>& set,
                             OracleLimits limits = {});

/// As above, and reports the first unresolved ordered pair (u, v) when
/// the answer is false.
bool is_strong_resolving_set(const Graph& g, const std::vector<int>& set,
                             std::pair<int, int>* violation, OracleLimits limits = {});

}  // namespace cosmd
