#pragma once

#include <cstdint>
#include <vector>

#include "powerdom/graph.hpp"

namespace powerdom::detail {

inline constexpr uint64_t kSaturated = ~uint64_t{0};

uint64_t binomial(int n, int k);  // saturates instead of overflowing

// Lexicographic k-combinations over [0, m).
void unrank_combination(uint64_t rank, int m, int k, std::vector<int>& out);
bool next_combination(std::vector<int>& c, int m);

// Connected pieces left after deleting the edges at positions cut, ordered
// by smallest member. The graph is expected to be a tree, so deleting j
// edges leaves exactly j+1 pieces.
void cut_components(const Graph& tree, const std::vector<Edge>& edges, const std::vector<int>& cut,
                    std::vector<VertexSet>& parts);

}  // namespace powerdom::detail
