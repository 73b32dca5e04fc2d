#include "powerdom/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace powerdom {

std::vector<int> tree_centers(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("tree_centers needs a tree");
    int n = tree.order();
    if (n == 1) return {0};
    std::vector<int> deg(size_t(n), 0);
    for (int v = 0; v < n; ++v) deg[size_t(v)] = tree.degree(v);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) frontier.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            deg[size_t(v)] = 0;
            --remaining;
            for (int u : tree.neighbors(v))
                if (deg[size_t(u)] > 0 && --deg[size_t(u)] == 1) next.push_back(u);
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

namespace {

std::string rooted_code(const Graph& tree, int v, int parent) {
    std::vector<std::string> child;
    for (int u : tree.neighbors(v))
        if (u != parent) child.push_back(rooted_code(tree, u, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    return out + ")";
}

}  // namespace

std::string tree_canonical_code(const Graph& tree) {
    auto centers = tree_centers(tree);
    std::string best = rooted_code(tree, centers[0], -1);
    if (centers.size() == 2) best = std::min(best, rooted_code(tree, centers[1], -1));
    return best;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("tree enumeration supports 1 <= n <= 12, got " + std::to_string(n));
    std::map<std::string, Graph> current;
    current.emplace("()", Graph(1, {}));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : current) {
            auto edges = t.edges();
            for (int v = 0; v < t.order(); ++v) {
                edges.emplace_back(v, t.order());
                Graph grown(k, edges);
                next.emplace(tree_canonical_code(grown), std::move(grown));
                edges.pop_back();
            }
        }
        current = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(current.size());
    for (auto& [code, t] : current) out.push_back(std::move(t));
    return out;
}

}  // namespace powerdom
