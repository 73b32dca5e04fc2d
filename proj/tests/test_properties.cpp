#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "powerdom/bounds.hpp"
#include "powerdom/partition.hpp"
#include "powerdom/solve.hpp"
#include "powerdom/trees.hpp"

using namespace powerdom;

namespace {

VertexSet random_subset(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("closure is extensive, monotone and idempotent") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + int(rng() % 11);
        Graph g = oracle::random_graph(rng, n, 0.3);
        VertexSet s = random_subset(rng, n, 0.25);
        VertexSet t = s | random_subset(rng, n, 0.25);
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing}) {
            VertexSet cs = closure(g, s, mode);
            CHECK(s.is_subset_of(cs));
            CHECK(cs.is_subset_of(closure(g, t, mode)));
            CHECK(closure(g, cs, ProcessMode::ZeroForcing) == cs);
        }
    }
}

TEST_CASE("simultaneous rounds agree with one force at a time") {
    std::mt19937 rng(1002);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = oracle::random_graph(rng, n, 0.35);
        VertexSet s = random_subset(rng, n, 0.3);
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing})
            CHECK(closure(g, s, mode) == oracle::sequential_closure(g, s, mode));
    }
}

TEST_CASE("failing is antitone in the removed set") {
    std::mt19937 rng(1003);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 3 + int(rng() % 8);
        Graph g = oracle::random_connected_graph(rng, n, 0.2);
        VertexSet small = random_subset(rng, n, 0.3);
        VertexSet large = small | random_subset(rng, n, 0.3);
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing}) {
            bool small_fails = closure(g, small.complement(), mode) != g.vertices();
            bool large_fails = closure(g, large.complement(), mode) != g.vertices();
            if (small_fails) CHECK(large_fails);
        }
    }
}

TEST_CASE("invariant chain on random connected graphs") {
    std::mt19937 rng(1004);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + int(rng() % 8);
        Graph g = oracle::random_connected_graph(rng, n, 0.25);
        int pd = power_domination_number(g).value;
        int dom = domination_number(g).value;
        int zf = zero_forcing_number(g).value;
        CHECK(pd <= dom);
        CHECK(pd <= zf);
        int ell = compute_ell(g, ProcessMode::PowerDomination).value;
        int zell = compute_ell(g, ProcessMode::ZeroForcing).value;
        CHECK(ell <= pd);
        CHECK(ell <= zell);
        CHECK(zell <= zf);
        if (g.size() > 0) {
            int delta = g.max_degree();
            CHECK((zf + delta - 1) / delta <= pd);
        }
    }
}

TEST_CASE("sandwich bounds hold on random cuts") {
    std::mt19937 rng(1005);
    int done = 0;
    while (done < 500) {
        int n = 5 + int(rng() % 8);
        Graph g = oracle::random_connected_graph(rng, n, 0.12);
        std::vector<int> cut = {int(rng() % unsigned(n))};
        if (rng() & 1) {
            int extra = int(rng() % unsigned(n));
            if (extra != cut[0]) cut.push_back(extra);
        }
        BoundReport r;
        try {
            r = cutset_bounds(g, cut);
        } catch (const std::invalid_argument&) {
            continue;  // not a cut-set of this graph, draw again
        }
        CHECK(r.all_hold());
        REQUIRE(r.exact.has_value());
        ++done;
    }
}

TEST_CASE("partition lower bounds transfer to products") {
    std::mt19937 rng(1006);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 2 + int(rng() % 4), 0.3);
        Graph h = oracle::random_connected_graph(rng, 2 + int(rng() % 4), 0.3);
        auto prod = cartesian_product(g, h);
        int lg = compute_ell(g, ProcessMode::PowerDomination).value;
        int lh = compute_ell(h, ProcessMode::PowerDomination).value;
        CHECK(lg * lh <= power_domination_number(prod.graph).value);
    }
}

TEST_CASE("forcing chain transfers to products") {
    std::mt19937 rng(1007);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 2 + int(rng() % 3), 0.35);
        Graph h = oracle::random_connected_graph(rng, 2 + int(rng() % 3), 0.35);
        auto prod = cartesian_product(g, h);
        int lg = compute_ell(g, ProcessMode::PowerDomination).value;
        int lh = compute_ell(h, ProcessMode::PowerDomination).value;
        int zg = compute_ell(g, ProcessMode::ZeroForcing).value;
        int zh = compute_ell(h, ProcessMode::ZeroForcing).value;
        int zz = zero_forcing_number(prod.graph).value;
        CHECK(lg * lh <= zg * zh);
        CHECK(zg * zh <= zz);
    }
}

TEST_CASE("product shape is symmetric") {
    std::mt19937 rng(1008);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + int(rng() % 5), 0.4);
        Graph h = oracle::random_graph(rng, 2 + int(rng() % 5), 0.4);
        auto gh = cartesian_product(g, h);
        auto hg = cartesian_product(h, g);
        CHECK(gh.graph.order() == g.order() * h.order());
        CHECK(gh.graph.size() == g.order() * h.size() + h.order() * g.size());
        CHECK(gh.graph.size() == hg.graph.size());
        // Swapping factors relabels (a,b) to (b,a); adjacency must map along.
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < h.order(); ++b)
                for (int a2 = 0; a2 < g.order(); ++a2)
                    for (int b2 = 0; b2 < h.order(); ++b2)
                        CHECK(gh.graph.adjacent(gh.labeling.index(a, b),
                                                gh.labeling.index(a2, b2)) ==
                              hg.graph.adjacent(hg.labeling.index(b, a),
                                                hg.labeling.index(b2, a2)));
    }
}

TEST_CASE("spider cover tracks power domination on random trees") {
    std::mt19937 rng(1009);
    for (int trial = 0; trial < 500; ++trial) {
        Graph t = oracle::random_tree(rng, 2 + int(rng() % 11));
        auto sp = spider_cover_number(t);
        auto pd = power_domination_number(t);
        CHECK(sp.value == pd.value);
        int ell = compute_ell(t, ProcessMode::PowerDomination).value;
        CHECK(ell == sp.value);
    }
}
