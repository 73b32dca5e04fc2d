#pragma once

#include <vector>

#include "powerdom/vertex_set.hpp"

namespace powerdom {

// Partition of {0..n-1} into nonempty parts. Canonical order is by smallest
// member, which keeps emitted certificates reproducible.
struct VertexPartition {
    int n = 0;
    std::vector<VertexSet> parts;

    VertexPartition() = default;
    VertexPartition(int universe, std::vector<VertexSet> p) : n(universe), parts(std::move(p)) {}

    static VertexPartition of(int universe, const std::vector<std::vector<int>>& lists);

    int size() const { return int(parts.size()); }

    // Part index of v, or -1 when v is uncovered.
    int part_of(int v) const;

    // Throws std::invalid_argument naming the offending part(s):
    // empty part, overlap, or gap.
    void validate() const;

    void canonicalize();
};

}  // namespace powerdom
