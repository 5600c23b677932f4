#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosmd/errors.hpp"

namespace cosmd {

enum class GraphKind { undirected, directed };

/// Simple graph over labelled vertices. Vertices are dense indices
/// 0..n-1 internally; labels appear only at the interfaces. Adjacency
/// lists are kept sorted and duplicate-free. For undirected graphs the
/// `out` and `in` lists are identical; for directed graphs `in` is the
/// exact transpose of `out`.
struct Graph {
    GraphKind kind = GraphKind::undirected;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    int n() const { return static_cast<int>(labels.size()); }

    /// Arc u->v for directed graphs, edge {u,v} for undirected ones.
    bool has_arc(int u, int v) const;

    const std::vector<int>& out_neighbors(int u) const { return out[u]; }
    const std::vector<int>& in_neighbors(int u) const { return in[u]; }
    /// Undirected open neighbourhood (also valid as out-adjacency).
    const std::vector<int>& neighbors(int u) const { return out[u]; }

    /// Index of a label; throws input_error if unknown.
    int index_of(std::string_view label) const;

    long long edge_count() const;
};

/// Validating constructor. Edge pairs name labels; for undirected graphs a
/// pair is an edge, for directed graphs an arc first->second. Rejects
/// duplicate labels, unknown endpoints, self-loops and repeated edges,
/// naming the offending item.
Graph build_graph(GraphKind kind, std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);

/// Same, but with endpoints already resolved to indices.
Graph build_graph_indexed(GraphKind kind, std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& edges);

/// Distance value used for unreachable pairs. Kept out-of-band so that
/// arithmetic on distances cannot silently absorb it.
inline constexpr int kUnreachable = -1;

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major, kUnreachable marks no path

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
};

/// Hop distances from `source`, following arc direction on directed graphs.
std::vector<int> bfs_distances(const Graph& g, int source);

/// All-pairs hop distances; row i equals bfs_distances(g, i).
DistanceMatrix all_pairs_distances(const Graph& g);

/// Complement of an undirected graph; rejects directed input.
Graph complement(const Graph& g);

enum class Connectivity { connected, strongly_connected, weakly_connected_only, disconnected };

/// Reachability classification. Undirected graphs report only
/// connected/disconnected; directed graphs report strongly_connected,
/// weakly_connected_only or disconnected.
Connectivity connectivity(const Graph& g);

/// Per-vertex flags over a directed graph: a vertex is solitary if some
/// other vertex has no arc either way to it, an in-vertex if some vertex
/// reaches it by a one-way arc, an out-vertex if it reaches some vertex by
/// a one-way arc, and in-out if both.
struct VertexClass {
    bool solitary = false;
    bool in_vertex = false;
    bool out_vertex = false;
    bool in_out = false;
};

VertexClass classify_vertex(const Graph& g, int u);

enum class TwinStatus { true_twins, false_twins, not_twins };

/// N[u]==N[v] gives true twins; N(u)==N(v) with u,v non-adjacent gives
/// false twins. Undirected graphs only, u != v.
TwinStatus twin_status(const Graph& g, int u, int v);

/// Parses the edge-list text format: first non-comment line is
/// `undirected` or `directed`, every following non-comment line is `u v`;
/// `#` starts a comment, blank lines are ignored, labels match
/// [A-Za-z0-9_]+ and are numbered by first appearance.
Graph parse_edge_list(std::string_view text);

/// Label-keyed equality: same kind, same label set, same edges under the
/// label names (vertex order may differ).
bool graphs_equal_labelled(const Graph& a, const Graph& b);

/// Induced subgraph on the given (index) subset; labels are kept, vertices
/// are renumbered in ascending index order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace cosmd
