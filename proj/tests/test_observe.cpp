#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "powerdom/observe.hpp"

using namespace powerdom;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph k33() {
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.push_back({a, b});
    return Graph(6, e);
}

}  // namespace

TEST_CASE("mode names") {
    CHECK(std::string(mode_name(ProcessMode::PowerDomination)) == "pd");
    CHECK(std::string(mode_name(ProcessMode::ZeroForcing)) == "zf");
}

TEST_CASE("domination step is the closed neighborhood") {
    Graph g = path(5);
    auto st = domination_step(g, VertexSet::of(5, {2}));
    CHECK(st.observed.to_vector() == std::vector<int>{1, 2, 3});
    CHECK(st.rounds_used == 0);
    CHECK(st.round[2] == 0);
    CHECK(st.round[1] == 0);
    CHECK(st.round[0] == -1);
}

TEST_CASE("rounds on a path, power domination") {
    Graph g = path(6);
    auto st = power_dominate(g, VertexSet::of(6, {0}));
    CHECK(st.covers(g));
    CHECK(st.round == std::vector<int>{0, 0, 1, 2, 3, 4});
    CHECK(st.rounds_used == 4);
}

TEST_CASE("rounds on a path, zero forcing") {
    Graph g = path(6);
    auto st = zero_force(g, VertexSet::of(6, {0}));
    CHECK(st.covers(g));
    CHECK(st.round == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(st.rounds_used == 5);
}

TEST_CASE("forcing within a round is simultaneous") {
    // From {0,2} on the path 0-1-2-3: vertex 2 sees two dark neighbors when
    // round 1 starts, so 3 must wait for round 2 even though 1 lights up.
    Graph g = path(4);
    auto st = zero_force(g, VertexSet::of(4, {0, 2}));
    CHECK(st.covers(g));
    CHECK(st.round == std::vector<int>{0, 1, 0, 2});
    CHECK(st.rounds_used == 2);
}

TEST_CASE("propagation can stall") {
    Graph g = k33();
    auto st = power_dominate(g, VertexSet::of(6, {0}));
    CHECK_FALSE(st.covers(g));
    CHECK(st.observed.to_vector() == std::vector<int>{0, 3, 4, 5});
    CHECK(st.rounds_used == 0);
    CHECK(is_power_dominating_set(g, VertexSet::of(6, {0, 1})));
    CHECK_FALSE(is_power_dominating_set(g, VertexSet::of(6, {0})));
}

TEST_CASE("propagate is idempotent") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + int(rng() % 10), 0.3);
        VertexSet s(g.order());
        s.add(int(rng() % unsigned(g.order())));
        auto once = power_dominate(g, s);
        auto twice = propagate(g, once);
        CHECK(twice.observed == once.observed);
        CHECK(twice.round == once.round);
        CHECK(twice.rounds_used == once.rounds_used);
    }
}

TEST_CASE("empty graph and empty seed conventions") {
    Graph empty(0, {});
    CHECK(is_power_dominating_set(empty, VertexSet(0)));
    CHECK(is_zero_forcing_set(empty, VertexSet(0)));
    Graph one(1, {});
    CHECK_FALSE(is_power_dominating_set(one, VertexSet(1)));
    CHECK(is_power_dominating_set(one, VertexSet::of(1, {0})));
}

TEST_CASE("closure kernels match the staged versions") {
    std::mt19937 rng(60);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = oracle::random_graph(rng, n, 0.35);
        VertexSet s(n);
        int picks = 1 + int(rng() % 3);
        for (int i = 0; i < picks; ++i) s.add(int(rng() % unsigned(n)));
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing}) {
            VertexSet fast = closure(g, s, mode);
            ObservationState staged = mode == ProcessMode::PowerDomination ? power_dominate(g, s)
                                                                           : zero_force(g, s);
            CHECK(fast == staged.observed);
            CHECK(fast == oracle::sequential_closure(g, s, mode));
        }
    }
}

TEST_CASE("into kernels reuse caller storage") {
    Graph g = path(5);
    VertexSet out(5);
    power_dominate_into(g, VertexSet::of(5, {0}), out);
    CHECK(out.count() == 5);
    zero_force_into(g, VertexSet::of(5, {2}), out);
    CHECK(out.to_vector() == std::vector<int>{2});  // overwritten, not merged
}
