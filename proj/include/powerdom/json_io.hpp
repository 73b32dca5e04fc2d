#pragma once

#include <string>
#include <vector>

#include "powerdom/bounds.hpp"
#include "powerdom/graph.hpp"
#include "powerdom/observe.hpp"
#include "powerdom/partition.hpp"
#include "powerdom/solve.hpp"
#include "powerdom/vertex_partition.hpp"

namespace powerdom {

// {"n": ..., "edges": [[u,v], ...], "labels": [...]} with labels optional.
// Output is deterministic: sorted keys, sorted edges, 2-space indent.
std::string graph_to_json_text(const Graph& g);
Graph graph_from_json_text(const std::string& text);

// Every emitter below tags its object with a "kind" field so a verifier
// can dispatch without guessing. Timing fields are never emitted; output
// bytes depend only on the mathematical content.
std::string observation_to_json_text(const ObservationState& st);
std::string witness_to_json_text(const SearchWitness& w);
std::string partition_to_json_text(const VertexPartition& p);
std::string certificate_to_json_text(const FailedPartitionCertificate& c);
std::string local_blocking_to_json_text(const VertexPartition& p,
                                        const std::vector<VertexSet>& u_sets,
                                        ProcessMode mode);
std::string leaf_path_to_json_text(const TreePartitionResult& r);
std::string bound_report_to_json_text(const BoundReport& r);

}  // namespace powerdom
