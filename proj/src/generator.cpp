#include "cosmd/generator.hpp"

#include <string>

namespace cosmd {

namespace {

NodeKind draw_kind(SplitMix64& rng, const KindWeights& w, bool directed) {
    double total = w.wt_union + w.wt_join + (directed ? w.wt_dir_join : 0.0);
    if (!(w.wt_union > 0) || !(w.wt_join > 0) || (directed && !(w.wt_dir_join > 0)))
        throw input_error("kind weights must be positive");
    double x = rng.unit() * total;
    if (x < w.wt_union) return NodeKind::op_union;
    if (x < w.wt_union + w.wt_join) return NodeKind::op_join;
    return NodeKind::op_dir_join;
}

}  // namespace

CoTree random_cotree(const GenConfig& cfg) {
    if (cfg.leaves < 1) throw input_error("leaf count must be positive");
    const bool directed = cfg.mode == GenMode::directed_join_root;
    SplitMix64 rng(cfg.seed);

    CoTree t;
    t.nodes.reserve(static_cast<std::size_t>(cfg.leaves) * 2);
    t.labels.reserve(cfg.leaves);

    // build top-down with an explicit stack; children are created before
    // their parent is finalized, so parents remember child slots
    struct Task {
        int leaves;
        bool pin_join;
        NodeId parent;  // -1 for root
        int slot;       // 0 = left, 1 = right
    };
    std::vector<Task> stack{{cfg.leaves, directed && cfg.leaves >= 2, -1, 0}};

    auto attach = [&](const Task& task, NodeId id) {
        if (task.parent == -1)
            t.root = id;
        else
            t.nodes[task.parent].children[task.slot] = id;
    };

    while (!stack.empty()) {
        Task task = stack.back();
        stack.pop_back();
        if (task.leaves == 1) {
            NodeId id = static_cast<NodeId>(t.nodes.size());
            t.nodes.push_back({NodeKind::leaf, static_cast<std::int32_t>(t.labels.size()), {}});
            t.labels.push_back("v" + std::to_string(t.labels.size()));
            attach(task, id);
            continue;
        }
        NodeKind kind = task.pin_join ? NodeKind::op_join : draw_kind(rng, cfg.weights, directed);
        int left = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(task.leaves - 1)));
        NodeId id = static_cast<NodeId>(t.nodes.size());
        t.nodes.push_back({kind, -1, {-1, -1}});
        attach(task, id);
        // push right first so the left subtree is built (and labelled) first
        stack.push_back({task.leaves - left, false, id, 1});
        stack.push_back({left, false, id, 0});
    }
    return t;
}

namespace {

// binary shapes over [0, leaves): either a leaf or a split position
struct Shape {
    int leaves;
    int split = 0;                      // leaves in the left subtree
    const Shape* left = nullptr;
    const Shape* right = nullptr;
};

void build_shapes(int leaves, std::vector<std::vector<Shape>>& pool,
                  std::vector<std::vector<const Shape*>>& by_count) {
    // pool[k] owns shapes with k leaves; by_count[k] lists them
    for (int k = 1; k <= leaves; ++k) {
        if (k == 1) {
            pool[k].push_back({1});
            by_count[k].push_back(&pool[k][0]);
            continue;
        }
        // reserve exactly, pointers into pool[k] must stay stable
        std::size_t total = 0;
        for (int l = 1; l < k; ++l)
            total += by_count[l].size() * by_count[k - l].size();
        pool[k].reserve(total);
        for (int l = 1; l < k; ++l)
            for (const Shape* ls : by_count[l])
                for (const Shape* rs : by_count[k - l]) {
                    pool[k].push_back({k, l, ls, rs});
                    by_count[k].push_back(&pool[k].back());
                }
    }
}

}  // namespace

void enumerate_cotrees(int leaves, GenMode mode,
                       const std::function<void(const CoTree&)>& yield) {
    if (leaves < 1) throw input_error("leaf count must be positive");
    if (leaves > 8) throw input_error("enumeration is limited to 8 leaves");
    const bool directed = mode == GenMode::directed_join_root;
    const int kinds = directed ? 3 : 2;
    const int internal = leaves - 1;

    std::vector<std::vector<Shape>> pool(leaves + 1);
    std::vector<std::vector<const Shape*>> by_count(leaves + 1);
    build_shapes(leaves, pool, by_count);

    std::vector<int> assignment(internal, 0);
    for (const Shape* shape : by_count[leaves]) {
        for (;;) {
            CoTree t;
            t.labels.reserve(leaves);
            // materialize this (shape, kinds) combination
            int next_kind = 0;
            struct Item {
                const Shape* shape;
                NodeId parent;
                int slot;
            };
            std::vector<Item> stack{{shape, -1, 0}};
            auto attach = [&](const Item& item, NodeId id) {
                if (item.parent == -1)
                    t.root = id;
                else
                    t.nodes[item.parent].children[item.slot] = id;
            };
            while (!stack.empty()) {
                Item item = stack.back();
                stack.pop_back();
                if (item.shape->leaves == 1) {
                    NodeId id = static_cast<NodeId>(t.nodes.size());
                    t.nodes.push_back(
                        {NodeKind::leaf, static_cast<std::int32_t>(t.labels.size()), {}});
                    t.labels.push_back(std::string(1, static_cast<char>('a' + t.labels.size())));
                    attach(item, id);
                    continue;
                }
                int code = assignment[next_kind++];
                NodeKind kind = code == 0   ? NodeKind::op_union
                                : code == 1 ? NodeKind::op_join
                                            : NodeKind::op_dir_join;
                NodeId id = static_cast<NodeId>(t.nodes.size());
                t.nodes.push_back({kind, -1, {-1, -1}});
                attach(item, id);
                stack.push_back({item.shape->right, id, 1});
                stack.push_back({item.shape->left, id, 0});
            }
            yield(t);

            // odometer over kind assignments
            int pos = internal - 1;
            while (pos >= 0 && assignment[pos] == kinds - 1) assignment[pos--] = 0;
            if (pos < 0) break;
            ++assignment[pos];
        }
    }
}

}  // namespace cosmd
