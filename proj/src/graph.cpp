#include "powerdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace powerdom {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (!labels_.empty() && int(labels_.size()) != n)
        throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                    " does not match order " + std::to_string(n));
    rows_.assign(size_t(n), VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for order " + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows_[size_t(u)].add(v);
        rows_[size_t(v)].add(u);
    }
    for (int v = 0; v < n; ++v) m_ += rows_[size_t(v)].count();
    m_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[size_t(u)].next(u); v != -1; v = rows_[size_t(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

std::string Graph::label(int v) const {
    assert(v >= 0 && v < n_);
    if (has_labels()) return labels_[size_t(v)];
    return std::to_string(v);
}

int Graph::find_vertex(const std::string& name) const {
    for (int v = 0; v < n_; ++v)
        if (has_labels() && labels_[size_t(v)] == name) return v;
    if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
        long idx = std::stol(name);
        if (idx >= 0 && idx < n_) return int(idx);
    }
    return -1;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h, int max_vertices) {
    long long total = (long long)g.order() * h.order();
    if (total > max_vertices)
        throw std::length_error("product would have " + std::to_string(total) +
                                " vertices, cap is " + std::to_string(max_vertices));
    ProductLabeling lab{g.order(), h.order()};
    std::vector<Edge> edges;
    edges.reserve(size_t((long long)g.order() * h.size() + (long long)h.order() * g.size()));
    for (int a = 0; a < g.order(); ++a)
        for (const auto& [x, y] : h.edges()) edges.emplace_back(lab.index(a, x), lab.index(a, y));
    for (const auto& [a, b] : g.edges())
        for (int x = 0; x < h.order(); ++x) edges.emplace_back(lab.index(a, x), lab.index(b, x));
    std::vector<std::string> labels;
    if (g.has_labels() || h.has_labels()) {
        labels.reserve(size_t(total));
        for (int a = 0; a < g.order(); ++a)
            for (int x = 0; x < h.order(); ++x) labels.push_back("(" + g.label(a) + "," + h.label(x) + ")");
    }
    return {Graph(int(total), edges, std::move(labels)), lab};
}

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    std::vector<int> kept = keep.to_vector();
    std::vector<int> pos(size_t(g.order()), -1);
    for (size_t i = 0; i < kept.size(); ++i) pos[size_t(kept[i])] = int(i);
    std::vector<Edge> edges;
    for (int u : kept)
        for (int v : g.neighbors(u) & keep)
            if (u < v) edges.emplace_back(pos[size_t(u)], pos[size_t(v)]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : kept) labels.push_back(g.label(v));
    return {Graph(int(kept.size()), edges, std::move(labels)), std::move(kept)};
}

SubgraphResult remove_vertices(const Graph& g, const VertexSet& drop) {
    if (drop.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    return induced_subgraph(g, drop.complement());
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.order());
        comp.add(s);
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (!comp.contains(v)) {
                    comp.add(v);
                    queue.push_back(v);
                }
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("distance endpoint out of range");
    std::vector<int> dist(size_t(g.order()), -1);
    dist[size_t(u)] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        if (a == v) return dist[size_t(a)];
        for (int b : g.neighbors(a))
            if (dist[size_t(b)] == -1) {
                dist[size_t(b)] = dist[size_t(a)] + 1;
                queue.push_back(b);
            }
    }
    return std::nullopt;
}

std::vector<int> tree_path(const Graph& tree, int u, int v) {
    if (u < 0 || u >= tree.order() || v < 0 || v >= tree.order())
        throw std::invalid_argument("path endpoint out of range");
    std::vector<int> parent(size_t(tree.order()), -2);
    parent[size_t(u)] = -1;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        if (a == v) break;
        for (int b : tree.neighbors(a))
            if (parent[size_t(b)] == -2) {
                parent[size_t(b)] = a;
                queue.push_back(b);
            }
    }
    if (parent[size_t(v)] == -2) throw std::invalid_argument("endpoints are in different components");
    std::vector<int> path;
    for (int a = v; a != -1; a = parent[size_t(a)]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_spider(const Graph& g) {
    if (!is_tree(g)) return false;
    int big = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) ++big;
    return big <= 1;
}

VertexSet leaves(const Graph& g) {
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.add(v);
    return out;
}

}  // namespace powerdom
