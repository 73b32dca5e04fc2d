#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "powerdom/observe.hpp"
#include "powerdom/vertex_partition.hpp"

namespace powerdom {

struct SolveOptions {
    uint64_t max_checks = 0;        // predicate evaluations, 0 = unlimited
    int64_t wall_ms = 0;            // 0 = unlimited; nondeterministic cutoff, opt in
    int threads = 1;                // parallel subset scan; result independent of count
    bool dominance_pruning = false; // drop v when some u has N[v] subset of N[u]
    int max_depth = -1;             // give up past this size (refutation runs)
    int known_lower = -1;           // extra lower bound the caller can prove
};

// Result of an iterative-deepening search. When conclusive, value is exact
// and witness holds the lexicographically least optimum found by the scan.
// Otherwise lower carries what the search did prove: every size below it
// was exhaustively refuted before the budget or depth limit cut in.
struct SearchWitness {
    std::string invariant;
    bool conclusive = false;
    int value = -1;
    int lower = 0;
    int upper = -1;  // interval results only (see compute_ell); else -1
    VertexSet witness;
    std::optional<VertexPartition> partition;
    bool exhaustive = false;
    double elapsed_ms = 0.0;

    bool proves_at_least(int bound) const { return (conclusive ? value : lower) >= bound; }
};

SearchWitness power_domination_number(const Graph& g, const SolveOptions& opt = {});
SearchWitness zero_forcing_number(const Graph& g, const SolveOptions& opt = {});
SearchWitness domination_number(const Graph& g, const SolveOptions& opt = {});

// Minimum partition of a tree into parts that induce spiders. Solved by
// cutting j = k-1 tree edges in lexicographic order; cross-checked against
// the power domination number, and a disagreement is a hard failure.
SearchWitness spider_cover_number(const Graph& tree, const SolveOptions& opt = {});

}  // namespace powerdom
