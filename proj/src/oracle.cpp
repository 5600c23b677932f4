#include "cosmd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cosmd {

namespace {

void check_oracle_input(const Graph& g, const OracleLimits& limits) {
    if (g.n() == 0) throw input_error("oracle: empty graph");
    if (g.n() > limits.max_vertices)
        throw input_error("oracle: graph exceeds the exact-computation bound of " +
                          std::to_string(limits.max_vertices) + " vertices");
    auto c = connectivity(g);
    if (g.kind == GraphKind::undirected && c != Connectivity::connected)
        throw connectivity_error("oracle: graph is not connected");
    if (g.kind == GraphKind::directed && c != Connectivity::strongly_connected)
        throw connectivity_error("oracle: graph is not strongly connected");
}

}  // namespace

MmdRelation mmd_relation(const Graph& g, OracleLimits limits) {
    check_oracle_input(g, limits);
    const int n = g.n();
    auto dist = all_pairs_distances(g);

    MmdRelation rel;
    rel.directed = g.kind == GraphKind::directed;
    rel.n = n;
    rel.mat.assign(static_cast<std::size_t>(n) * n, 0);

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            bool u_maximal = true;
            for (int up : g.in_neighbors(u))
                if (dist.at(up, v) > dist.at(u, v)) {
                    u_maximal = false;
                    break;
                }
            if (!u_maximal) continue;
            bool v_maximal = true;
            for (int vp : g.out_neighbors(v))
                if (dist.at(u, vp) > dist.at(u, v)) {
                    v_maximal = false;
                    break;
                }
            if (v_maximal) rel.mat[static_cast<std::size_t>(u) * n + v] = 1;
        }
    }
    return rel;
}

Graph srg_exact(const Graph& g, OracleLimits limits) {
    auto rel = mmd_relation(g, limits);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < rel.n; ++u)
        for (int v = u + 1; v < rel.n; ++v)
            if (rel.at(u, v) || rel.at(v, u)) edges.emplace_back(u, v);
    return build_graph_indexed(GraphKind::undirected, g.labels, edges);
}

namespace {

// Maximum clique over bitmask adjacency; among maximum cliques the one
// with the numerically largest mask wins (deterministic witness).
struct CliqueSearch {
    const std::vector<std::uint32_t>& adj;
    int best_size = 0;
    std::uint32_t best_mask = 0;

    explicit CliqueSearch(const std::vector<std::uint32_t>& a) : adj(a) {}

    void consider(std::uint32_t mask) {
        int size = std::popcount(mask);
        if (size > best_size || (size == best_size && mask > best_mask)) {
            best_size = size;
            best_mask = mask;
        }
    }

    bool is_clique(std::uint32_t mask) const {
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((mask & ~adj[v] & ~(1u << v)) != 0) return false;
        }
        return true;
    }

    void expand(std::uint32_t current, std::uint32_t candidates) {
        if (candidates == 0) {
            consider(current);
            return;
        }
        int reach = std::popcount(current) + std::popcount(candidates);
        if (reach < best_size) return;
        if (reach == best_size) {
            // a tie is only possible by taking every candidate
            if (is_clique(current | candidates)) consider(current | candidates);
            return;
        }
        // high vertices first so large masks are found early
        int v = 31 - std::countl_zero(candidates);
        std::uint32_t bit = 1u << v;
        expand(current | bit, candidates & adj[v]);
        expand(current, candidates ^ bit);
    }
};

}  // namespace

CoverResult min_vertex_cover_exact(const Graph& h, OracleLimits limits) {
    if (h.kind != GraphKind::undirected)
        throw input_error("vertex cover is defined for undirected graphs only");
    const int n = h.n();
    if (n > limits.max_vertices || n > 31)
        throw input_error("oracle: graph exceeds the exact-computation bound");

    // independent sets of h = cliques of its complement
    std::vector<std::uint32_t> non_adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !h.has_arc(u, v)) non_adj[u] |= 1u << v;

    CliqueSearch search(non_adj);
    std::uint32_t all = n == 31 ? 0x7fffffffu : (1u << n) - 1;
    search.expand(0, all);

    // maximising the independent-set mask minimises the cover mask
    std::uint32_t cover_mask = all & ~search.best_mask;
    CoverResult r;
    r.size = std::popcount(cover_mask);
    for (int v = 0; v < n; ++v)
        if (cover_mask & (1u << v)) r.cover.push_back(v);
    return r;
}

ExactSmd smd_exact(const Graph& g, OracleLimits limits) {
    auto srg = srg_exact(g, limits);
    auto cover = min_vertex_cover_exact(srg, limits);
    ExactSmd r;
    r.smd = cover.size;
    r.resolving_set = std::move(cover.cover);
    if (!is_strong_resolving_set(g, r.resolving_set, limits))
        throw std::logic_error("oracle self-check failed: cover is not a strong resolving set");
    return r;
}

bool strongly_resolves(const Graph& g, const DistanceMatrix& dist, int w, int u, int v) {
    if (g.kind == GraphKind::undirected) {
        return dist.at(w, u) == dist.at(w, v) + dist.at(v, u) ||
               dist.at(w, v) == dist.at(w, u) + dist.at(u, v);
    }
    return dist.at(u, w) == dist.at(u, v) + dist.at(v, w) ||
           dist.at(w, v) == dist.at(w, u) + dist.at(u, v);
}

bool strongly_resolves(const Graph& g, int w, int u, int v) {
    for (int x : {w, u, v})
        if (x < 0 || x >= g.n()) throw input_error("unknown vertex");
    auto c = connectivity(g);
    if (c != Connectivity::connected && c != Connectivity::strongly_connected)
        throw connectivity_error("strong resolution needs a (strongly) connected graph");
    return strongly_resolves(g, all_pairs_distances(g), w, u, v);
}

bool is_strong_resolving_set(const Graph& g, const std::vector<int>& set,
                             std::pair<int, int>* violation, OracleLimits limits) {
    check_oracle_input(g, limits);
    auto dist = all_pairs_distances(g);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            bool resolved = false;
            for (int w : set) {
                if (w < 0 || w >= g.n()) throw input_error("unknown vertex in set");
                if (strongly_resolves(g, dist, w, u, v)) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) {
                if (violation) *violation = {u, v};
                return false;
            }
        }
    }
    return true;
}

bool is_strong_resolving_set(const Graph& g, const std::vector<int>& set, OracleLimits limits) {
    return is_strong_resolving_set(g, set, nullptr, limits);
}

}  // namespace cosmd
