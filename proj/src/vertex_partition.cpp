#include "powerdom/vertex_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace powerdom {

VertexPartition VertexPartition::of(int universe, const std::vector<std::vector<int>>& lists) {
    VertexPartition p;
    p.n = universe;
    for (const auto& l : lists) p.parts.push_back(VertexSet::of(universe, l));
    return p;
}

int VertexPartition::part_of(int v) const {
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].contains(v)) return int(i);
    return -1;
}

void VertexPartition::validate() const {
    VertexSet seen(n);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].universe() != n)
            throw std::invalid_argument("part " + std::to_string(i) + " has universe " +
                                        std::to_string(parts[i].universe()) + ", expected " +
                                        std::to_string(n));
        if (parts[i].empty())
            throw std::invalid_argument("part " + std::to_string(i) + " is empty");
        if (seen.intersects(parts[i])) {
            VertexSet overlap = seen & parts[i];
            int v = overlap.first();
            for (size_t j = 0; j < i; ++j)
                if (parts[j].contains(v))
                    throw std::invalid_argument("parts " + std::to_string(j) + " and " + std::to_string(i) +
                                                " overlap at vertex " + std::to_string(v));
        }
        seen |= parts[i];
    }
    if (seen.count() != n)
        throw std::invalid_argument("partition misses vertex " +
                                    std::to_string(seen.complement().first()));
}

void VertexPartition::canonicalize() {
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
}

}  // namespace powerdom
