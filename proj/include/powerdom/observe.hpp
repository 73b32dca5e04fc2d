#pragma once

#include <vector>

#include "powerdom/graph.hpp"

namespace powerdom {

enum class ProcessMode { PowerDomination, ZeroForcing };

const char* mode_name(ProcessMode mode);  // "pd" / "zf"

struct ObservationState {
    VertexSet observed;
    std::vector<int> round;  // per vertex; -1 while unobserved
    int rounds_used = 0;

    bool covers(const Graph& g) const { return observed.count() == g.order(); }
};

// Round 0: S and everything adjacent to it.
ObservationState domination_step(const Graph& g, const VertexSet& s);

// Forcing rounds, simultaneous within a round: a vertex observed by round
// t-1 with exactly one unobserved neighbor forces that neighbor at round t.
// Runs to the fixed point; applying it again changes nothing.
ObservationState propagate(const Graph& g, ObservationState state);

ObservationState power_dominate(const Graph& g, const VertexSet& s);
ObservationState zero_force(const Graph& g, const VertexSet& s);

// Convention: the empty graph is power dominated by the empty set.
bool is_power_dominating_set(const Graph& g, const VertexSet& s);
bool is_zero_forcing_set(const Graph& g, const VertexSet& s);

// Closure kernels for search loops. Same fixed point as the staged versions,
// no round bookkeeping, and scratch space is reused across calls.
void power_dominate_into(const Graph& g, const VertexSet& s, VertexSet& observed);
void zero_force_into(const Graph& g, const VertexSet& s, VertexSet& observed);
VertexSet closure(const Graph& g, const VertexSet& s, ProcessMode mode);

}  // namespace powerdom
