#include "cosmd/smd_directed.hpp"

#include <algorithm>
#include <array>

#include "witness_arena.hpp"

namespace cosmd {

std::string to_string(DirectedRule rule) {
    return rule == DirectedRule::prose_derived ? "prose_derived" : "as_printed";
}

std::string to_string(MProvenance p) {
    switch (p) {
        case MProvenance::leaf: return "leaf";
        case MProvenance::take_left: return "left";
        case MProvenance::take_right: return "right";
        case MProvenance::ml_plus_sr: return "m_l+s_r";
        case MProvenance::mr_plus_sl: return "m_r+s_l";
        case MProvenance::sil_plus_sir: return "si_l+si_r";
        case MProvenance::sol_plus_sor: return "so_l+so_r";
        case MProvenance::il_plus_ir: return "i_l+i_r";
        case MProvenance::ol_plus_or: return "o_l+o_r";
    }
    return "?";
}

bool cross_edge_predicate(const VertexClass& u, const VertexClass& v) {
    return u.solitary || v.solitary || u.in_out || v.in_out ||
           (u.in_vertex && v.in_vertex) || (u.out_vertex && v.out_vertex);
}

namespace {

using Ref = detail::WitnessArena::Ref;

struct Val {
    int size = 0;
    Ref ref = detail::WitnessArena::kEmpty;
};

struct State {
    Val m, s, i, o, si, so;
};

struct DpPass {
    State root;
    std::vector<MProvenance> m_trace;  // per node id of the binary tree
    detail::WitnessArena arena;
};

// first strict maximum wins, matching the recurrence's listing order
Val pick_max(std::initializer_list<Val> cands) {
    Val best{-1, detail::WitnessArena::kEmpty};
    for (const auto& c : cands)
        if (c.size > best.size) best = c;
    return best;
}

DpPass run_dp(const CoTree& t, DirectedRule rule) {
    if (!is_binary(t)) throw input_error("clique DP expects a binary co-tree");

    auto order = t.postorder();
    DpPass p;
    p.m_trace.assign(t.nodes.size(), MProvenance::leaf);

    // postorder value stack: the two children of an internal node are the
    // two topmost finished states; memory stays bounded by the tree height
    std::vector<State> pending;

    std::int32_t next_leaf = 0;
    for (NodeId id : order) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            State st;
            st.m = {1, detail::WitnessArena::single(next_leaf++)};
            pending.push_back(st);
            continue;
        }
        State r = pending.back();
        pending.pop_back();
        State l = pending.back();
        pending.pop_back();
        State st;
        auto sum = [&](const Val& a, const Val& b) {
            return Val{a.size + b.size, p.arena.unite(a.ref, b.ref)};
        };
        switch (nd.kind) {
            case NodeKind::op_union:
                st.m = pick_max({l.m, r.m});
                p.m_trace[id] = st.m.size == l.m.size ? MProvenance::take_left
                                                      : MProvenance::take_right;
                // every vertex gains a non-neighbour, so all become solitary
                st.s = st.m;
                st.i = pick_max({l.i, r.i});
                st.o = pick_max({l.o, r.o});
                st.si = st.m;
                st.so = st.m;
                break;
            case NodeKind::op_dir_join:
                st.m = pick_max({l.m, r.m});
                p.m_trace[id] = st.m.size == l.m.size ? MProvenance::take_left
                                                      : MProvenance::take_right;
                // left in-vertices and right out-vertices turn in-out; the
                // left side keeps its solitary pairs, so the s-eligible
                // vertices are left solitary-or-in and right
                // solitary-or-out — tracked exactly by si/so.
                if (rule == DirectedRule::prose_derived) {
                    st.s = pick_max({l.si, r.so});
                } else {
                    st.s = pick_max({l.s, r.s, r.i, l.o});
                }
                st.i = pick_max({r.m, l.i});  // all right vertices become in
                st.o = pick_max({l.m, r.o});
                st.si = pick_max({l.si, r.m});
                st.so = pick_max({l.m, r.so});
                break;
            case NodeKind::op_join: {
                Val ml_sr = sum(l.m, r.s);
                Val mr_sl = sum(r.m, l.s);
                if (rule == DirectedRule::prose_derived) {
                    Val si_si = sum(l.si, r.si);
                    Val so_so = sum(l.so, r.so);
                    st.m = pick_max({ml_sr, mr_sl, si_si, so_so});
                    p.m_trace[id] = st.m.size == ml_sr.size   ? MProvenance::ml_plus_sr
                                    : st.m.size == mr_sl.size ? MProvenance::mr_plus_sl
                                    : st.m.size == si_si.size ? MProvenance::sil_plus_sir
                                                              : MProvenance::sol_plus_sor;
                } else {
                    Val i_i = sum(l.i, r.i);
                    Val o_o = sum(l.o, r.o);
                    st.m = pick_max({ml_sr, mr_sl, i_i, o_o});
                    p.m_trace[id] = st.m.size == ml_sr.size   ? MProvenance::ml_plus_sr
                                    : st.m.size == mr_sl.size ? MProvenance::mr_plus_sl
                                    : st.m.size == i_i.size   ? MProvenance::il_plus_ir
                                                              : MProvenance::ol_plus_or;
                }
                st.s = sum(l.s, r.s);
                st.i = sum(l.i, r.i);
                st.o = sum(l.o, r.o);
                st.si = sum(l.si, r.si);
                st.so = sum(l.so, r.so);
                break;
            }
            case NodeKind::leaf:
                break;
        }
        pending.push_back(st);
    }
    p.root = pending.back();
    return p;
}

std::vector<int> materialize(const detail::WitnessArena& arena, Ref ref) {
    std::vector<int> out;
    arena.collect(ref, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CliqueVector clique_vector(const CoTree& binary_tree, DirectedRule rule) {
    auto pass = run_dp(binary_tree, rule);
    const State& root = pass.root;
    CliqueVector v;
    v.m = root.m.size;
    v.s = root.s.size;
    v.i = root.i.size;
    v.o = root.o.size;
    v.si = root.si.size;
    v.so = root.so.size;
    v.M = materialize(pass.arena, root.m.ref);
    v.S = materialize(pass.arena, root.s.ref);
    v.I = materialize(pass.arena, root.i.ref);
    v.O = materialize(pass.arena, root.o.ref);
    v.SI = materialize(pass.arena, root.si.ref);
    v.SO = materialize(pass.arena, root.so.ref);
    return v;
}

DirectedSmdResult smd_directed(const CoTree& t, DirectedRule rule) {
    const int n = t.leaf_count();
    if (n >= 2) {
        auto canonical = canonicalize(t);
        auto root_kind = canonical.tree.node(canonical.tree.root).kind;
        if (root_kind != NodeKind::op_join) {
            std::string name = root_kind == NodeKind::op_union ? "union" : "dir_join";
            throw connectivity_error("graph is not strongly connected (co-tree root is a " +
                                     name + ", not a join)");
        }
    }

    auto binary = binarize(t);
    auto pass = run_dp(binary, rule);
    const State& root = pass.root;

    DirectedSmdResult r;
    r.n = n;
    r.smd = n - root.m.size;
    r.rule_trace = std::move(pass.m_trace);
    r.clique_witness = materialize(pass.arena, root.m.ref);
    std::vector<char> in_witness(n, 0);
    for (int v : r.clique_witness) in_witness[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_witness[v]) r.resolving_set.push_back(v);
    return r;
}

}  // namespace cosmd
