#pragma once

#include <vector>

#include "graph.hpp"
#include "vertex_partition.hpp"
#include "vertex_set.hpp"

namespace powerdom {

// A generated graph together with the structural data its family carries:
// a vertex partition (whose complements all fail to power dominate), the
// per-part witness sets used by the local-blocking test, a suggested
// cut-set, and per-component cut subsets for the decomposition bounds.
// Fields a family does not provide stay empty.
//
// Generators are deterministic: the same parameters always produce the
// same labeled graph, byte for byte.
struct FamilyInstance {
    Graph graph;
    VertexPartition partition;
    std::vector<VertexSet> u_sets;
    std::vector<int> cut;
    std::vector<std::vector<int>> cut_choice;
};

// 14-vertex graph whose power domination number is 3 while every spanning
// tree achieves 2. Vertices are labeled u1..u4, v1..v4, w1..w6; the bundled
// partition is {u's}, {v's}, {w's}.
FamilyInstance gen_gallery14();

// 19-vertex graph gluing three subdivided stars through a shared middle
// (21 edges, so cyclic) with ell = gamma_P = 4. Vertices are labeled
// l1..l9, v1..v3, u1..u6, z; the bundled partition has four parts.
FamilyInstance gen_gallery19();

// The cut-set family G_{m,s} (m >= 2, s >= 1): m copies of K_{1,s+2} with
// every edge subdivided once (centers v_i, support vertices y<i>_<j>, outer
// vertices x<i>_<j>) plus hub vertices d_1..d_s, where d_j is adjacent to
// x<i>_j and y<i>_j for every i. Bundles the (m+s)-part partition and its
// witness sets, and the cut-set {d_1..d_s}.
FamilyInstance gen_gms(int m, int s);

// Necklace of k >= 3 diamonds (K_4 minus an edge) in a cyclic arrangement:
// the degree-2 vertices q_i and p_{i+1 mod k} are matched, giving a
// connected cubic graph on 4k vertices. Bundles the diamond partition with
// witness sets {a_i, b_i}.
FamilyInstance gen_necklace(int k);

// Attaches two pendant vertices u<i>_1, u<i>_2 to every vertex u_i of a
// connected graph H; pendant_edge[i] additionally joins the pendant pair.
// An empty flag vector means no pendant pair edges. Bundles the partition
// into triples {u_i, u<i>_1, u<i>_2} with witness sets {u<i>_1, u<i>_2}.
FamilyInstance gen_family_f(const Graph& h, const std::vector<bool>& pendant_edge = {});

// Two components H_1, H_2 (each a pair of K_{1,n} stars with adjacent
// centers, n >= 3) plus two nonadjacent vertices x1, x2 each adjacent to
// all of H_1 and H_2. Bundles the cut-set {x1, x2} and the per-component
// choices C_1 = {x1}, C_2 = {x2}.
FamilyInstance gen_overlap_example(int n);

// Spider with the given leg lengths: vertex 0 is the center, each leg a
// path hanging off it. Requires at least one leg, every length >= 1.
Graph gen_spider(const std::vector<int>& legs);

// Path on n >= 1 vertices, 0 - 1 - ... - n-1.
Graph gen_path(int n);

// Star K_{1,n} with n >= 1 leaves; vertex 0 is the center.
Graph gen_star(int n);

// Double star: adjacent centers 0 and 1 carrying p and q leaves.
Graph gen_doublestar(int p, int q);

// Complete bipartite graph on sides [0,a) and [a,a+b).
Graph gen_complete_bipartite(int a, int b);

}  // namespace powerdom
