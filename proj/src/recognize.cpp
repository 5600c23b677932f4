#include "cosmd/recognize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

namespace cosmd {

namespace {

// Connected components of an adjacency-predicate graph on `subset`,
// ordered by smallest contained vertex (seeds are scanned in ascending
// subset order). `adjacent` takes original vertex ids.
template <typename AdjPred>
std::vector<std::vector<int>> predicate_components(const std::vector<int>& subset,
                                                   AdjPred adjacent) {
    const int k = static_cast<int>(subset.size());
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> result;
    for (int seed = 0; seed < k; ++seed) {
        if (comp[seed] != -1) continue;
        int id = static_cast<int>(result.size());
        result.emplace_back();
        std::deque<int> queue{seed};
        comp[seed] = id;
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            result[id].push_back(subset[a]);
            for (int b = 0; b < k; ++b) {
                if (comp[b] == -1 && adjacent(subset[a], subset[b])) {
                    comp[b] = id;
                    queue.push_back(b);
                }
            }
        }
        std::sort(result[id].begin(), result[id].end());
    }
    return result;
}

std::optional<std::vector<std::string>> find_induced_p4(const Graph& g,
                                                        const std::vector<int>& subset) {
    if (subset.size() > 60) return std::nullopt;  // keep the witness search cheap
    const int k = static_cast<int>(subset.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (b == a || !g.has_arc(subset[a], subset[b])) continue;
            for (int c = 0; c < k; ++c) {
                if (c == a || c == b) continue;
                if (!g.has_arc(subset[b], subset[c]) || g.has_arc(subset[a], subset[c])) continue;
                for (int d = a + 1; d < k; ++d) {  // a < d kills the reversal duplicate
                    if (d == b || d == c) continue;
                    if (g.has_arc(subset[c], subset[d]) && !g.has_arc(subset[b], subset[d]) &&
                        !g.has_arc(subset[a], subset[d]))
                        return std::vector<std::string>{g.labels[subset[a]], g.labels[subset[b]],
                                                        g.labels[subset[c]], g.labels[subset[d]]};
                }
            }
        }
    return std::nullopt;
}

struct Decomposition {
    NodeKind kind;
    std::vector<std::vector<int>> parts;
};

using AnalyzeOutcome = std::variant<int /*leaf vertex*/, Decomposition, NotCograph>;

AnalyzeOutcome analyze_undirected(const Graph& g, const std::vector<int>& subset) {
    if (subset.size() == 1) return subset[0];
    auto has_edge = [&](int u, int v) { return g.has_arc(u, v); };
    auto comps = predicate_components(subset, has_edge);
    if (comps.size() > 1) return Decomposition{NodeKind::op_union, std::move(comps)};
    auto no_edge = [&](int u, int v) { return !g.has_arc(u, v); };
    auto co_comps = predicate_components(subset, no_edge);
    if (co_comps.size() > 1) return Decomposition{NodeKind::op_join, std::move(co_comps)};

    NotCograph nc;
    nc.reason = "connected and co-connected part of size " + std::to_string(subset.size()) +
                " admits no union/join split";
    if (auto p4 = find_induced_p4(g, subset)) {
        nc.p4 = *p4;
        nc.reason += "; induced P4: " + nc.p4[0] + "-" + nc.p4[1] + "-" + nc.p4[2] + "-" + nc.p4[3];
    }
    return nc;
}

AnalyzeOutcome analyze_directed(const Graph& g, const std::vector<int>& subset) {
    if (subset.size() == 1) return subset[0];

    auto weakly_adjacent = [&](int u, int v) { return g.has_arc(u, v) || g.has_arc(v, u); };
    auto weak = predicate_components(subset, weakly_adjacent);
    if (weak.size() > 1) return Decomposition{NodeKind::op_union, std::move(weak)};

    auto not_bidirectional = [&](int u, int v) { return !(g.has_arc(u, v) && g.has_arc(v, u)); };
    auto join_comps = predicate_components(subset, not_bidirectional);
    if (join_comps.size() > 1) return Decomposition{NodeKind::op_join, std::move(join_comps)};

    auto not_one_way = [&](int u, int v) {
        return g.has_arc(u, v) == g.has_arc(v, u);  // 0 or 2 arcs
    };
    auto chain_comps = predicate_components(subset, not_one_way);
    if (chain_comps.size() > 1) {
        const int k = static_cast<int>(chain_comps.size());
        // every cross pair has exactly one arc; demand a uniform direction
        // per component pair and a transitive tournament
        std::vector<std::vector<char>> beats(k, std::vector<char>(k, 0));
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                bool forward = g.has_arc(chain_comps[a][0], chain_comps[b][0]);
                for (int u : chain_comps[a])
                    for (int v : chain_comps[b])
                        if (g.has_arc(u, v) != forward || g.has_arc(v, u) == forward)
                            return NotCograph{"arcs between chain parts are not uniform", {}};
                beats[forward ? a : b][forward ? b : a] = 1;
            }
        }
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int wa = std::accumulate(beats[a].begin(), beats[a].end(), 0);
            int wb = std::accumulate(beats[b].begin(), beats[b].end(), 0);
            return wa > wb;
        });
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (!beats[order[a]][order[b]])
                    return NotCograph{"chain parts are not totally ordered", {}};
        Decomposition d{NodeKind::op_dir_join, {}};
        for (int idx : order) d.parts.push_back(std::move(chain_comps[idx]));
        return d;
    }

    return NotCograph{"part of size " + std::to_string(subset.size()) +
                          " admits no union/join/dir_join split",
                      {}};
}

template <typename Analyze>
RecognitionResult run_recognition(const Graph& g, Analyze analyze) {
    CoTree tree;

    struct Frame {
        NodeKind kind;
        std::vector<std::vector<int>> parts;
        std::size_t next = 0;
        std::vector<NodeId> done;
    };
    std::vector<Frame> stack;

    std::vector<int> everything(g.n());
    std::iota(everything.begin(), everything.end(), 0);

    auto make_leaf = [&](int vertex) {
        NodeId id = static_cast<NodeId>(tree.nodes.size());
        tree.nodes.push_back({NodeKind::leaf, static_cast<std::int32_t>(tree.labels.size()), {}});
        tree.labels.push_back(g.labels[vertex]);
        return id;
    };

    // seed with the whole vertex set
    {
        auto outcome = analyze(g, everything);
        if (auto* nc = std::get_if<NotCograph>(&outcome)) return *nc;
        if (auto* leaf = std::get_if<int>(&outcome)) {
            tree.root = make_leaf(*leaf);
            return tree;
        }
        auto& d = std::get<Decomposition>(outcome);
        stack.push_back({d.kind, std::move(d.parts), 0, {}});
    }

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next < top.parts.size()) {
            const auto& part = top.parts[top.next++];
            auto outcome = analyze(g, part);
            if (auto* nc = std::get_if<NotCograph>(&outcome)) return *nc;
            if (auto* leaf = std::get_if<int>(&outcome)) {
                top.done.push_back(make_leaf(*leaf));
            } else {
                auto& d = std::get<Decomposition>(outcome);
                stack.push_back({d.kind, std::move(d.parts), 0, {}});
            }
        } else {
            NodeId id = static_cast<NodeId>(tree.nodes.size());
            tree.nodes.push_back({top.kind, -1, std::move(top.done)});
            stack.pop_back();
            if (stack.empty()) {
                tree.root = id;
                return tree;
            }
            stack.back().done.push_back(id);
        }
    }
    throw std::logic_error("recognition stack underflow");
}

}  // namespace

RecognitionResult recognize_undirected(const Graph& g) {
    if (g.kind != GraphKind::undirected)
        throw input_error("recognize_undirected expects an undirected graph");
    if (g.n() == 0) throw input_error("empty graph");
    return run_recognition(
        g, [](const Graph& gr, const std::vector<int>& s) { return analyze_undirected(gr, s); });
}

RecognitionResult recognize_directed(const Graph& g) {
    if (g.kind != GraphKind::directed)
        throw input_error("recognize_directed expects a directed graph");
    if (g.n() == 0) throw input_error("empty graph");
    return run_recognition(
        g, [](const Graph& gr, const std::vector<int>& s) { return analyze_directed(gr, s); });
}

}  // namespace cosmd
