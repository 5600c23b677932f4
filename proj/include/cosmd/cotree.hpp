#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cosmd/errors.hpp"
#include "cosmd/graph.hpp"

namespace cosmd {

enum class NodeKind : std::uint8_t { leaf, op_union, op_join, op_dir_join };

using NodeId = std::int32_t;

struct CoTreeNode {
    NodeKind kind = NodeKind::leaf;
    std::int32_t label = -1;          // index into CoTree::labels, leaves only
    std::vector<NodeId> children;     // >= 2 entries for internal nodes
};

/// Operation tree over named leaves. Nodes live in a flat arena so that
/// degenerate million-leaf chains never recurse; traversals use explicit
/// stacks throughout. Child order is semantically significant for
/// dir_join nodes and preserved (for determinism) everywhere else.
struct CoTree {
    std::vector<CoTreeNode> nodes;
    std::vector<std::string> labels;  // distinct leaf labels
    NodeId root = -1;

    const CoTreeNode& node(NodeId id) const { return nodes[id]; }
    int leaf_count() const { return static_cast<int>(labels.size()); }
    bool contains_dir_join() const;

    /// Ids of all nodes below (and including) the root, children first.
    std::vector<NodeId> postorder() const;
    /// Leaf label indices under `id` in left-to-right order.
    std::vector<std::int32_t> leaf_labels_under(NodeId id) const;
};

/// Grammar: tree := IDENT | "U(" tree ("," tree)+ ")" | "J(" ... | "D(" ...
/// IDENT = [A-Za-z0-9_]+, whitespace insignificant. Duplicate leaf labels
/// and internal nodes with fewer than two children are rejected.
CoTree parse_cotree(std::string_view text);

std::string serialize(const CoTree& t);

/// Expands the tree into a graph: union is disjoint union, join adds all
/// edges (both arcs when directed) between parts, dir_join adds one-way
/// arcs from every earlier child to every later child. A tree without
/// dir_join nodes evaluates to an undirected graph, otherwise directed.
/// Graph vertex order is leaf order.
Graph evaluate(const CoTree& t);

/// evaluate with the result kind forced; forcing undirected on a tree
/// containing dir_join is rejected.
Graph evaluate_as(const CoTree& t, GraphKind kind);

/// A co-tree whose same-kind parent/child chains have been merged, so
/// kinds alternate on every root-to-leaf path.
struct CanonicalForm {
    CoTree tree;
};

CanonicalForm canonicalize(const CoTree& t);

bool is_canonical(const CoTree& t);

/// Left-associative expansion into a binary tree: X(c1,c2,c3) becomes
/// X(X(c1,c2),c3). Child order (hence dir_join semantics) is preserved.
CoTree binarize(const CoTree& t);

bool is_binary(const CoTree& t);

/// Structural equality (same shape, kinds and labels).
bool trees_equal(const CoTree& a, const CoTree& b);

}  // namespace cosmd
