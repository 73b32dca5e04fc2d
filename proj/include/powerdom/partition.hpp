#pragma once

#include <variant>
#include <vector>

#include "powerdom/observe.hpp"
#include "powerdom/solve.hpp"
#include "powerdom/vertex_partition.hpp"

namespace powerdom {

// A partition fails when, for every part, the rest of the graph does not
// observe everything. witnesses[i] holds what stays unobserved from V - Pi.
struct FailedPartitionCertificate {
    ProcessMode mode = ProcessMode::PowerDomination;
    VertexPartition partition;
    std::vector<VertexSet> witnesses;
};

// First part whose complement observes the whole graph, with the full trace.
struct PartitionRefutation {
    int part_index = -1;
    ObservationState trace;
};

using FailedPartitionOutcome = std::variant<FailedPartitionCertificate, PartitionRefutation>;

inline bool certified(const FailedPartitionOutcome& o) {
    return std::holds_alternative<FailedPartitionCertificate>(o);
}

// Part order of the input is preserved. Requires at least 2 parts.
FailedPartitionOutcome check_failed_partition(const Graph& g, const VertexPartition& p,
                                              ProcessMode mode);

inline FailedPartitionOutcome is_failed_pd_partition(const Graph& g, const VertexPartition& p) {
    return check_failed_partition(g, p, ProcessMode::PowerDomination);
}
inline FailedPartitionOutcome is_failed_zf_partition(const Graph& g, const VertexPartition& p) {
    return check_failed_partition(g, p, ProcessMode::ZeroForcing);
}

struct BlockingSetOptions {
    int max_n = 18;  // full subset enumeration cutoff; refuses past it
};

// Inclusion-minimal sets B whose removal breaks observation, that is,
// closure(V - B) != V. Found by exhaustive subset enumeration, ascending
// as bitmasks. Antitone: any superset of a blocking set blocks too.
std::vector<VertexSet> minimal_blocking_sets(const Graph& g, ProcessMode mode,
                                             const BlockingSetOptions& opt = {});

struct EllOptions {
    SolveOptions solver;                  // drives the matching upper bound
    BlockingSetOptions blocking;          // enumeration cutoff
    uint64_t packing_node_budget = 50'000'000;
    std::vector<VertexPartition> hints;   // candidate failed partitions to try first
};

// Largest k admitting a failed partition into k parts, or 1 when none exists.
// Equal to the maximum number of pairwise disjoint minimal blocking sets:
// parts of a failed partition shrink to disjoint blocking sets, and a packing
// pads out to a partition by merging leftovers into one part. Exact when the
// packing search finishes or its size meets the upper bound; otherwise an
// interval [lower, upper] with conclusive = false.
SearchWitness compute_ell(const Graph& g, ProcessMode mode, const EllOptions& opt = {});

// Sufficient condition for a failed partition: every u_sets[i] is a nonempty
// subset of parts[i] with N[u_sets[i]] inside parts[i], and every outside
// neighbor of u_sets[i] within parts[i] has at least two neighbors there.
bool check_local_blocking(const Graph& g, const VertexPartition& p, const std::vector<VertexSet>& u_sets);

struct ProductPartitionResult {
    ProductGraph product;
    VertexPartition partition;            // parts Pi x Sigma_j, canonical order
    FailedPartitionCertificate certificate;
};

// Builds the product partition {Pi x Sigma_j} from failed partitions of the
// factors and certifies it on G box H. The certificate witnesses are checked
// to contain the corresponding U_i x V_j blocks; both inputs must be failed.
ProductPartitionResult product_failed_partition(const Graph& g, const VertexPartition& pg,
                                                const Graph& h, const VertexPartition& ph,
                                                ProcessMode mode = ProcessMode::PowerDomination,
                                                int max_vertices = 4096);

struct LeafPathReport {
    int part_index = -1;
    int w = -1, x = -1;          // the two tree leaves
    std::vector<int> path;       // w..x in the tree
    std::vector<bool> pd_status; // per path vertex: observed from V - part
    bool verdict = false;
};

// Condition: an observed path vertex never has an observed path neighbor.
// The part need not be connected here; the path may leave it.
LeafPathReport check_leaf_path(const Graph& tree, const VertexSet& part, int w, int x);

struct TreePartitionResult {
    VertexPartition partition;
    std::vector<LeafPathReport> reports;  // one per part, same order
};

// Partition of a tree into sp(T) connected parts, each holding two leaves
// whose path passes check_leaf_path. Scans edge cuts in lexicographic
// order, so the result is deterministic; failing to find one is a hard
// error because every tree admits such a partition.
TreePartitionResult tree_leaf_path_partition(const Graph& tree, const SolveOptions& opt = {});

}  // namespace powerdom
