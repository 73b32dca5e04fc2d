#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powerdom/vertex_set.hpp"

namespace powerdom {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1.
// Adjacency is stored as one bitset row per vertex; rows stay symmetric and
// irreflexive by construction. Labels are optional display names.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int size() const { return m_; }

    const VertexSet& neighbors(int v) const {
        assert(v >= 0 && v < n_);
        return rows_[size_t(v)];
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.add(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const;

    bool adjacent(int u, int v) const {
        assert(u >= 0 && u < n_);
        return neighbors(u).contains(v);
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // sorted with u < v in each pair
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    // label if present, otherwise the decimal index
    std::string label(int v) const;

    // index of the vertex with this label, or the parsed decimal index; -1 if neither
    int find_vertex(const std::string& name) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

// Pairs (g, h) with g in G and h in H, flattened row-major: index = g * |V(H)| + h.
struct ProductLabeling {
    int g_order = 0;
    int h_order = 0;

    int index(int g, int h) const {
        assert(g >= 0 && g < g_order && h >= 0 && h < h_order);
        return g * h_order + h;
    }
    std::pair<int, int> unpack(int idx) const {
        assert(idx >= 0 && idx < g_order * h_order);
        return {idx / h_order, idx % h_order};
    }
};

struct ProductGraph {
    Graph graph;
    ProductLabeling labeling;
};

// Cartesian product: (g,h) ~ (g',h') iff (g=g' and h~h') or (h=h' and g~g').
// Refuses products larger than max_vertices.
ProductGraph cartesian_product(const Graph& g, const Graph& h, int max_vertices = 4096);

struct SubgraphResult {
    Graph graph;
    std::vector<int> kept;  // new index -> old index
};

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep);
SubgraphResult remove_vertices(const Graph& g, const VertexSet& drop);

// Connected components, each a vertex set of G, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Hop distance, or nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

// Unique u..v path in a tree, endpoints included.
std::vector<int> tree_path(const Graph& tree, int u, int v);

bool is_tree(const Graph& g);

// Tree with at most one vertex of degree >= 3.
bool is_spider(const Graph& g);

VertexSet leaves(const Graph& g);

}  // namespace powerdom
