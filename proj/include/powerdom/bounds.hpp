#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "solve.hpp"

namespace powerdom {

// One named bound value. rule states the inequality or quantity it
// instantiates, in terms of the invariants involved.
struct BoundEntry {
    std::string name;
    std::string rule;
    int value = -1;
};

// A bundle of bound values around one exact quantity. exact is set only
// when the exact computation finished; partial marks reports where some
// subcomputation hit its budget and the affected entries are omitted.
struct BoundReport {
    std::vector<BoundEntry> bounds;
    std::optional<int> exact;
    std::string exact_name;
    std::vector<std::pair<std::string, bool>> holds;
    bool partial = false;

    const BoundEntry* find(const std::string& name) const;
    bool all_hold() const;
};

// Cut-set decomposition: the components H_i of G - C (optionally grouped
// into blocks treated as one H_i each) and the graphs K_i induced by
// V(H_i) together with C. Indices in parts refer to G; the subgraphs carry
// their own vertex maps.
struct CutDecomposition {
    std::vector<int> cut;
    std::vector<VertexSet> parts;
    std::vector<SubgraphResult> h;
    std::vector<SubgraphResult> k;
};

// Splits G along the cut-set C. blocks, when nonempty, groups the
// component indices of G - C; every component must appear exactly once.
// Throws invalid_argument unless C is a real cut-set (G - C has at least
// two components) and at least two blocks remain.
CutDecomposition decompose_along_cut(const Graph& g, const std::vector<int>& cut,
                                     const std::vector<std::vector<int>>& blocks = {});

// Sandwich bounds from a cut-set:
//   sum gamma_P(K_i) - (m-1)|C|  <=  gamma_P(G)  <=  sum gamma_P(H_i) + |C|.
// Computes both sides and the exact value; any inconclusive subcomputation
// drops the affected side and marks the report partial.
BoundReport cutset_bounds(const Graph& g, const std::vector<int>& cut,
                          const std::vector<std::vector<int>>& blocks = {},
                          const SolveOptions& opt = {});

// Upper bound from per-component cut subsets C_i (L_i = G[V(H_i) u C_i]):
//   gamma_P(G) <= sum gamma_P(L_i) + |C|.
// The witness C u (union of minimum solutions of the L_i) is verified to
// power dominate G before the bound is reported. c_sub holds one C_i per
// component of G - C, in decomposition order.
BoundReport generalized_upper(const Graph& g, const std::vector<int>& cut,
                              const std::vector<std::vector<int>>& c_sub,
                              const SolveOptions& opt = {});

// ceil(Z(G) / max degree) <= gamma_P(G). Rejects edgeless graphs.
BoundReport check_degree_ratio_bound(const Graph& g, const SolveOptions& opt = {});

struct ProductBoundOptions {
    SolveOptions solver;
    int exact_max_vertices = 20;  // exact product invariant below this order
    int max_vertices = 4096;      // product size cap
};

// Lower bounds on gamma_P(G box H): max of the factor values when both
// factors are connected, the product ell_G * ell_H always, and
// gamma_P(G) * gamma_P(H) when both factors are trees. The product
// invariant is computed exactly on small products; otherwise the combined
// bound is established by refuting every candidate set below it.
BoundReport check_product_bounds(const Graph& g, const Graph& h,
                                 const ProductBoundOptions& opt = {});

// The forcing chain ell_G * ell_H <= z_G * z_H <= Z(G box H), where z is
// the zero-forcing analogue of ell. When z_G, z_H >= 2 the middle-to-right
// step is certified by building the product failed partition; otherwise it
// is established by refutation below the bound.
BoundReport check_product_forcing_bounds(const Graph& g, const Graph& h,
                                         const ProductBoundOptions& opt = {});

}  // namespace powerdom
