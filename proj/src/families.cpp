#include "powerdom/families.hpp"

#include <stdexcept>
#include <string>

namespace powerdom {

namespace {

std::string num(int i) { return std::to_string(i); }

VertexPartition parts_of(int n, const std::vector<std::vector<int>>& lists) {
    auto p = VertexPartition::of(n, lists);
    p.validate();
    p.canonicalize();
    return p;
}

}  // namespace

FamilyInstance gen_gallery14() {
    // u1..u4 = 0..3, v1..v4 = 4..7, w1..w6 = 8..13.
    std::vector<std::string> labels;
    for (int i = 1; i <= 4; ++i) labels.push_back("u" + num(i));
    for (int i = 1; i <= 4; ++i) labels.push_back("v" + num(i));
    for (int i = 1; i <= 6; ++i) labels.push_back("w" + num(i));
    std::vector<Edge> edges = {
        {8, 9},    // w1 w2
        {9, 10},   // w2 w3
        {10, 4},   // w3 v1
        {4, 6},    // v1 v3
        {11, 12},  // w4 w5
        {12, 13},  // w5 w6
        {13, 0},   // w6 u1
        {0, 2},    // u1 u3
        {7, 4},    // v4 v1
        {5, 4},    // v2 v1
        {3, 0},    // u4 u1
        {1, 0},    // u2 u1
        {12, 10},  // w5 w3
        {13, 9},   // w6 w2
    };
    FamilyInstance out{Graph(14, edges, labels), {}, {}, {}, {}};
    out.partition = parts_of(14, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11, 12, 13}});
    return out;
}

FamilyInstance gen_gallery19() {
    // l1..l9 = 0..8, v1..v3 = 9..11, u1..u6 = 12..17, z = 18.
    std::vector<std::string> labels;
    for (int i = 1; i <= 9; ++i) labels.push_back("l" + num(i));
    for (int i = 1; i <= 3; ++i) labels.push_back("v" + num(i));
    for (int i = 1; i <= 6; ++i) labels.push_back("u" + num(i));
    labels.push_back("z");
    std::vector<Edge> edges = {
        {0, 9},    // l1 v1
        {1, 9},    // l2 v1
        {2, 9},    // l3 v1
        {9, 12},   // v1 u1
        {12, 13},  // u1 u2
        {13, 18},  // u2 z
        {18, 14},  // z  u3
        {14, 15},  // u3 u4
        {15, 10},  // u4 v2
        {3, 10},   // l4 v2
        {4, 10},   // l5 v2
        {5, 10},   // l6 v2
        {18, 16},  // z  u5
        {16, 17},  // u5 u6
        {17, 11},  // u6 v3
        {6, 11},   // l7 v3
        {7, 11},   // l8 v3
        {8, 11},   // l9 v3
        {13, 16},  // u2 u5
        {13, 14},  // u2 u3
        {12, 18},  // u1 z
    };
    FamilyInstance out{Graph(19, edges, labels), {}, {}, {}, {}};
    out.partition = parts_of(19, {{0, 1, 2, 9},
                                  {12, 13, 14, 15, 16, 17, 18},
                                  {3, 4, 5, 10},
                                  {6, 7, 8, 11}});
    return out;
}

FamilyInstance gen_gms(int m, int s) {
    if (m < 2) throw std::invalid_argument("gen_gms requires m >= 2");
    if (s < 1) throw std::invalid_argument("gen_gms requires s >= 1");
    // Copy i occupies a block of 2s+5 vertices: v_i, then the support
    // vertices y<i>_1..y<i>_{s+2}, then the outer vertices x<i>_1..x<i>_{s+2}.
    // The hubs d_1..d_s come last.
    int block = 2 * s + 5;
    int n = m * block + s;
    auto v_of = [&](int i) { return (i - 1) * block; };
    auto y_of = [&](int i, int j) { return (i - 1) * block + j; };
    auto x_of = [&](int i, int j) { return (i - 1) * block + (s + 2) + j; };
    auto d_of = [&](int j) { return m * block + (j - 1); };

    std::vector<std::string> labels(static_cast<size_t>(n));
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        labels[size_t(v_of(i))] = "v" + num(i);
        for (int j = 1; j <= s + 2; ++j) {
            labels[size_t(y_of(i, j))] = "y" + num(i) + "_" + num(j);
            labels[size_t(x_of(i, j))] = "x" + num(i) + "_" + num(j);
            edges.push_back({v_of(i), y_of(i, j)});
            edges.push_back({y_of(i, j), x_of(i, j)});
        }
    }
    for (int j = 1; j <= s; ++j) {
        labels[size_t(d_of(j))] = "d" + num(j);
        for (int i = 1; i <= m; ++i) {
            edges.push_back({d_of(j), x_of(i, j)});
            edges.push_back({d_of(j), y_of(i, j)});
        }
    }

    FamilyInstance out{Graph(n, edges, labels), {}, {}, {}, {}};
    // Part j <= s is N[d_j]; part s+i holds v_i and its two hub-free arms.
    std::vector<std::vector<int>> lists;
    std::vector<std::vector<int>> usets;
    for (int j = 1; j <= s; ++j) {
        std::vector<int> part{d_of(j)};
        std::vector<int> uset{d_of(j)};
        for (int i = 1; i <= m; ++i) {
            part.push_back(x_of(i, j));
            part.push_back(y_of(i, j));
            uset.push_back(x_of(i, j));
        }
        lists.push_back(part);
        usets.push_back(uset);
    }
    for (int i = 1; i <= m; ++i) {
        lists.push_back({v_of(i), x_of(i, s + 1), x_of(i, s + 2), y_of(i, s + 1), y_of(i, s + 2)});
        usets.push_back({x_of(i, s + 1), x_of(i, s + 2), y_of(i, s + 1), y_of(i, s + 2)});
    }
    auto partition = VertexPartition::of(n, lists);
    partition.validate();
    // Keep the part order aligned with the witness sets instead of
    // canonicalizing; the hub parts come first.
    out.partition = partition;
    for (const auto& u : usets) out.u_sets.push_back(VertexSet::of(n, u));
    for (int j = 1; j <= s; ++j) out.cut.push_back(d_of(j));
    return out;
}

FamilyInstance gen_necklace(int k) {
    if (k < 3) throw std::invalid_argument("gen_necklace requires k >= 3");
    // Diamond i is a_i=4i, b_i=4i+1, p_i=4i+2, q_i=4i+3 with pq the missing
    // edge; the matching joins q_i to p_{i+1 mod k}.
    int n = 4 * k;
    std::vector<std::string> labels(static_cast<size_t>(n));
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        int a = 4 * i, b = 4 * i + 1, p = 4 * i + 2, q = 4 * i + 3;
        labels[size_t(a)] = "a" + num(i + 1);
        labels[size_t(b)] = "b" + num(i + 1);
        labels[size_t(p)] = "p" + num(i + 1);
        labels[size_t(q)] = "q" + num(i + 1);
        edges.push_back({a, b});
        edges.push_back({a, p});
        edges.push_back({a, q});
        edges.push_back({b, p});
        edges.push_back({b, q});
        edges.push_back({q, 4 * ((i + 1) % k) + 2});
    }
    FamilyInstance out{Graph(n, edges, labels), {}, {}, {}, {}};
    std::vector<std::vector<int>> lists;
    for (int i = 0; i < k; ++i) {
        lists.push_back({4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
        out.u_sets.push_back(VertexSet::of(n, {4 * i, 4 * i + 1}));
    }
    out.partition = parts_of(n, lists);
    return out;
}

FamilyInstance gen_family_f(const Graph& h, const std::vector<bool>& pendant_edge) {
    int n = h.order();
    if (n < 1) throw std::invalid_argument("gen_family_f requires a nonempty graph");
    if (!is_connected(h)) throw std::invalid_argument("gen_family_f requires a connected graph");
    if (!pendant_edge.empty() && int(pendant_edge.size()) != n)
        throw std::invalid_argument("gen_family_f: one pendant flag per vertex");

    std::vector<std::string> labels(size_t(3 * n));
    std::vector<Edge> edges = h.edges();
    for (int i = 0; i < n; ++i) {
        int p1 = n + 2 * i, p2 = n + 2 * i + 1;
        labels[size_t(i)] = "u" + num(i + 1);
        labels[size_t(p1)] = "u" + num(i + 1) + "_1";
        labels[size_t(p2)] = "u" + num(i + 1) + "_2";
        edges.push_back({i, p1});
        edges.push_back({i, p2});
        if (!pendant_edge.empty() && pendant_edge[size_t(i)]) edges.push_back({p1, p2});
    }
    FamilyInstance out{Graph(3 * n, edges, labels), {}, {}, {}, {}};
    std::vector<std::vector<int>> lists;
    for (int i = 0; i < n; ++i) {
        lists.push_back({i, n + 2 * i, n + 2 * i + 1});
        out.u_sets.push_back(VertexSet::of(3 * n, {n + 2 * i, n + 2 * i + 1}));
    }
    auto partition = VertexPartition::of(3 * n, lists);
    partition.validate();
    out.partition = partition;
    return out;
}

FamilyInstance gen_overlap_example(int n) {
    if (n < 3) throw std::invalid_argument("gen_overlap_example requires n >= 3");
    // Component t in {0,1}: centers c1, c2 each carrying n leaves, with the
    // leaves of a center immediately after it. x1, x2 come last.
    int block = 2 * n + 2;
    int x1 = 2 * block, x2 = 2 * block + 1;
    std::vector<std::string> labels(size_t(x2 + 1));
    std::vector<Edge> edges;
    const char* stem[2] = {"a", "b"};
    for (int t = 0; t < 2; ++t) {
        int c1 = t * block, c2 = t * block + n + 1;
        labels[size_t(c1)] = std::string(stem[t]) + "1";
        labels[size_t(c2)] = std::string(stem[t]) + "2";
        edges.push_back({c1, c2});
        for (int j = 1; j <= n; ++j) {
            labels[size_t(c1 + j)] = std::string(stem[t]) + "1_" + num(j);
            labels[size_t(c2 + j)] = std::string(stem[t]) + "2_" + num(j);
            edges.push_back({c1, c1 + j});
            edges.push_back({c2, c2 + j});
        }
        for (int v = t * block; v < (t + 1) * block; ++v) {
            edges.push_back({x1, v});
            edges.push_back({x2, v});
        }
    }
    labels[size_t(x1)] = "x1";
    labels[size_t(x2)] = "x2";
    FamilyInstance out{Graph(x2 + 1, edges, labels), {}, {}, {}, {}};
    out.cut = {x1, x2};
    out.cut_choice = {{x1}, {x2}};
    return out;
}

Graph gen_spider(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("gen_spider requires at least one leg");
    int n = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("gen_spider requires leg lengths >= 1");
        n += len;
    }
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return Graph(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path requires n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph(n, edges);
}

Graph gen_star(int n) {
    if (n < 1) throw std::invalid_argument("gen_star requires n >= 1 leaves");
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) edges.push_back({0, v});
    return Graph(n + 1, edges);
}

Graph gen_doublestar(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("gen_doublestar requires p, q >= 1");
    std::vector<Edge> edges = {{0, 1}};
    for (int v = 0; v < p; ++v) edges.push_back({0, 2 + v});
    for (int v = 0; v < q; ++v) edges.push_back({1, 2 + p + v});
    return Graph(2 + p + q, edges);
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite requires a, b >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, edges);
}

}  // namespace powerdom
