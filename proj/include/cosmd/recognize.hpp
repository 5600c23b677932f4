#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cosmd/cotree.hpp"
#include "cosmd/graph.hpp"

namespace cosmd {

struct NotCograph {
    std::string reason;
    std::vector<std::string> p4;  // induced path witness in order, when found
};

using RecognitionResult = std::variant<CoTree, NotCograph>;

/// Recursive decomposition of an undirected graph: single vertices are
/// leaves, disconnected graphs decompose as the union of their
/// components, co-disconnected graphs as the join of their complement
/// components; anything else is not a co-graph (an induced P4 exists and
/// is reported when the failing part is small enough to search).
/// Components are ordered by smallest contained vertex; the returned
/// tree evaluates back to the input exactly.
RecognitionResult recognize_undirected(const Graph& g);

/// Directed counterpart. Cases tried in order: weakly disconnected ->
/// union; the auxiliary graph with an edge wherever a pair is NOT
/// joined by both arcs is disconnected -> join of its components; the
/// auxiliary graph with an edge wherever a pair does NOT have exactly
/// one arc is disconnected, cross arcs are uniform per component pair
/// and the component tournament is a strict total order -> dir_join
/// chain in that order; otherwise NotCograph.
RecognitionResult recognize_directed(const Graph& g);

}  // namespace cosmd
