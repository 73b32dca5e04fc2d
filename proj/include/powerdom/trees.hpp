#pragma once

#include <string>
#include <vector>

#include "powerdom/graph.hpp"

namespace powerdom {

// 1 or 2 middle vertices of a longest path, found by peeling leaves.
std::vector<int> tree_centers(const Graph& tree);

// Nested-parenthesis code of the tree rooted at its center (minimum over the
// two rooted codes when the center is an edge). Equal codes iff isomorphic.
std::string tree_canonical_code(const Graph& tree);

// One representative per isomorphism class of trees on n vertices, in
// canonical-code order. Grown by leaf attachment with code deduplication,
// which stays cheap through the supported cap of n = 12.
std::vector<Graph> enumerate_trees(int n);

}  // namespace powerdom
