#include "detail.hpp"

#include <algorithm>
#include <limits>

namespace powerdom::detail {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * uint64_t(n - k + i) / uint64_t(i);
        if (acc > (unsigned __int128)1 << 62) return kSaturated;
    }
    return uint64_t(acc);
}

void unrank_combination(uint64_t rank, int m, int k, std::vector<int>& out) {
    out.resize(size_t(k));
    int v = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            uint64_t block = binomial(m - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        out[size_t(i)] = v++;
    }
}

bool next_combination(std::vector<int>& c, int m) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[size_t(i)] < m - k + i) {
            ++c[size_t(i)];
            for (int j = i + 1; j < k; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

void cut_components(const Graph& tree, const std::vector<Edge>& edges, const std::vector<int>& cut,
                    std::vector<VertexSet>& parts) {
    int n = tree.order();
    std::vector<int> comp(size_t(n), -1);
    std::vector<char> cut_mark(edges.size(), 0);
    for (int e : cut) cut_mark[size_t(e)] = 1;
    auto adj = std::vector<std::vector<int>>(size_t(n));
    for (size_t e = 0; e < edges.size(); ++e) {
        if (cut_mark[e]) continue;
        adj[size_t(edges[e].first)].push_back(edges[e].second);
        adj[size_t(edges[e].second)].push_back(edges[e].first);
    }
    parts.clear();
    for (int s = 0; s < n; ++s) {
        if (comp[size_t(s)] != -1) continue;
        int id = int(parts.size());
        parts.emplace_back(n);
        std::vector<int> stack{s};
        comp[size_t(s)] = id;
        parts[size_t(id)].add(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[size_t(u)])
                if (comp[size_t(v)] == -1) {
                    comp[size_t(v)] = id;
                    parts[size_t(id)].add(v);
                    stack.push_back(v);
                }
        }
    }
}

}  // namespace powerdom::detail
