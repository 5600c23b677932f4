#include "cosmd/smd_undirected.hpp"

#include <algorithm>

#include "witness_arena.hpp"

namespace cosmd {

namespace {

struct NodeValue {
    int size = 0;
    detail::WitnessArena::Ref witness = detail::WitnessArena::kEmpty;
    bool is_leaf = false;
};

struct CliquePass {
    NodeValue root;
    std::vector<std::int32_t> provenance;  // per node id
    detail::WitnessArena arena;
};

CliquePass run_clique_pass(const CoTree& t) {
    if (t.contains_dir_join())
        throw input_error("undirected algorithm rejects trees with directed joins");

    auto order = t.postorder();
    CliquePass p;
    p.provenance.assign(t.nodes.size(), -1);

    // postorder value stack: an internal node consumes the topmost
    // children.size() finished values
    std::vector<NodeValue> pending;

    std::int32_t next_leaf = 0;
    for (NodeId id : order) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            pending.push_back({1, detail::WitnessArena::single(next_leaf++), true});
            continue;
        }
        const std::size_t arity = nd.children.size();
        const std::size_t base = pending.size() - arity;
        NodeValue value;
        if (nd.kind == NodeKind::op_union) {
            int best = -1;
            std::int32_t best_child = -1;
            for (std::size_t k = 0; k < arity; ++k) {
                if (pending[base + k].size > best) {
                    best = pending[base + k].size;
                    best_child = static_cast<std::int32_t>(k);
                }
            }
            value.size = best;
            value.witness = pending[base + best_child].witness;
            p.provenance[id] = best_child;
        } else {
            // join: sum the non-leaf children, count sibling leaves once
            bool seen_leaf = false;
            for (std::size_t k = 0; k < arity; ++k) {
                const NodeValue& child = pending[base + k];
                if (child.is_leaf) {
                    if (!seen_leaf) {
                        seen_leaf = true;
                        value.size += 1;
                        value.witness = p.arena.unite(value.witness, child.witness);
                    }
                } else {
                    value.size += child.size;
                    value.witness = p.arena.unite(value.witness, child.witness);
                }
            }
        }
        pending.resize(base);
        pending.push_back(value);
    }
    p.root = pending.back();
    return p;
}

}  // namespace

TwinlessCliqueResult max_twinless_clique(const CanonicalForm& t) {
    auto pass = run_clique_pass(t.tree);
    TwinlessCliqueResult r;
    r.size = pass.root.size;
    pass.arena.collect(pass.root.witness, r.witness);
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

SmdResult smd_undirected(const CoTree& t) {
    auto canonical = canonicalize(t);
    const auto& ct = canonical.tree;
    if (ct.node(ct.root).kind == NodeKind::op_union)
        throw connectivity_error("graph is disconnected (union at the co-tree root)");

    auto pass = run_clique_pass(ct);
    const int n = ct.leaf_count();

    SmdResult r;
    r.n = n;
    r.smd = n - pass.root.size;
    r.provenance = std::move(pass.provenance);

    pass.arena.collect(pass.root.witness, r.clique_witness);
    std::sort(r.clique_witness.begin(), r.clique_witness.end());
    std::vector<char> in_witness(n, 0);
    for (int v : r.clique_witness) in_witness[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_witness[v]) r.resolving_set.push_back(v);
    return r;
}

Graph srg_diameter2(const Graph& g) {
    if (g.kind != GraphKind::undirected)
        throw input_error("srg_diameter2 expects an undirected graph");
    const int n = g.n();
    auto dist = all_pairs_distances(g);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!dist.reachable(u, v)) throw connectivity_error("graph is disconnected");
            if (dist.at(u, v) > 2) throw connectivity_error("graph has diameter greater than 2");
        }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_arc(u, v))
                edges.emplace_back(u, v);  // complement edge
            else if (twin_status(g, u, v) == TwinStatus::true_twins)
                edges.emplace_back(u, v);
        }
    return build_graph_indexed(GraphKind::undirected, g.labels, edges);
}

}  // namespace cosmd
