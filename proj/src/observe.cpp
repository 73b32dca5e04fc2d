#include "powerdom/observe.hpp"

#include <stdexcept>

namespace powerdom {

const char* mode_name(ProcessMode mode) {
    return mode == ProcessMode::PowerDomination ? "pd" : "zf";
}

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                    " does not match graph order " + std::to_string(g.order()));
}

}  // namespace

ObservationState domination_step(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    ObservationState st{s, std::vector<int>(size_t(g.order()), -1), 0};
    for (int v : s) st.observed |= g.neighbors(v);
    for (int v : st.observed) st.round[size_t(v)] = 0;
    return st;
}

ObservationState propagate(const Graph& g, ObservationState st) {
    require_universe(g, st.observed);
    if (st.round.size() != size_t(g.order()))
        throw std::invalid_argument("observation state round vector has wrong length");
    while (true) {
        VertexSet forced(g.order());
        for (int w : st.observed) {
            VertexSet unobs = g.neighbors(w) - st.observed;
            if (unobs.count() == 1) forced |= unobs;
        }
        if (forced.empty()) break;
        ++st.rounds_used;
        for (int v : forced) st.round[size_t(v)] = st.rounds_used;
        st.observed |= forced;
    }
    return st;
}

ObservationState power_dominate(const Graph& g, const VertexSet& s) {
    return propagate(g, domination_step(g, s));
}

ObservationState zero_force(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    ObservationState st{s, std::vector<int>(size_t(g.order()), -1), 0};
    for (int v : s) st.round[size_t(v)] = 0;
    return propagate(g, std::move(st));
}

namespace {

// Fixed-point forcing on a raw observed set. Vertices whose neighborhood is
// fully observed are retired from the scan; they can never force again.
void propagate_into(const Graph& g, VertexSet& obs) {
    const int words = obs.word_count();
    thread_local VertexSet done, forced;
    if (done.universe() != obs.universe()) {
        done = VertexSet(obs.universe());
        forced = VertexSet(obs.universe());
    } else {
        done.clear();
    }
    bool grew = true;
    while (grew) {
        grew = false;
        forced.clear();
        for (int wi = 0; wi < words; ++wi) {
            uint64_t bits = obs.word(wi) & ~done.word(wi);
            while (bits) {
                int w = wi * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const VertexSet& nb = g.neighbors(w);
                int cnt = 0;
                int only = -1;
                for (int k = 0; k < words && cnt <= 1; ++k) {
                    uint64_t u = nb.word(k) & ~obs.word(k);
                    if (u) {
                        cnt += std::popcount(u);
                        only = k * 64 + std::countr_zero(u);
                    }
                }
                if (cnt == 0)
                    done.add(w);
                else if (cnt == 1)
                    forced.add(only);
            }
        }
        if (!forced.empty()) {
            obs |= forced;
            grew = true;
        }
    }
}

}  // namespace

void power_dominate_into(const Graph& g, const VertexSet& s, VertexSet& observed) {
    assert(s.universe() == g.order());
    observed = s;
    for (int v : s) observed |= g.neighbors(v);
    propagate_into(g, observed);
}

void zero_force_into(const Graph& g, const VertexSet& s, VertexSet& observed) {
    assert(s.universe() == g.order());
    observed = s;
    propagate_into(g, observed);
}

VertexSet closure(const Graph& g, const VertexSet& s, ProcessMode mode) {
    require_universe(g, s);
    VertexSet obs(g.order());
    if (mode == ProcessMode::PowerDomination)
        power_dominate_into(g, s, obs);
    else
        zero_force_into(g, s, obs);
    return obs;
}

bool is_power_dominating_set(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    if (g.order() == 0) return true;
    thread_local VertexSet obs;
    power_dominate_into(g, s, obs);
    return obs.count() == g.order();
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    if (g.order() == 0) return true;
    thread_local VertexSet obs;
    zero_force_into(g, s, obs);
    return obs.count() == g.order();
}

}  // namespace powerdom
