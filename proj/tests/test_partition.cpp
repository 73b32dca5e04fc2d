#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "powerdom/families.hpp"
#include "powerdom/partition.hpp"
#include "powerdom/trees.hpp"

using namespace powerdom;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph k33() {
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.push_back({a, b});
    return Graph(6, e);
}

}  // namespace

TEST_CASE("vertex partition validation") {
    CHECK_NOTHROW(VertexPartition::of(4, {{0, 1}, {2, 3}}).validate());
    CHECK_THROWS_AS(VertexPartition::of(4, {{0, 1}, {1, 2, 3}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition::of(4, {{0, 1}, {2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition::of(4, {{0, 1, 2, 3}, {}}).validate(), std::invalid_argument);
    VertexPartition p = VertexPartition::of(4, {{3, 1}, {0, 2}});
    CHECK(p.part_of(3) == 0);
    CHECK(p.part_of(0) == 1);
    p.canonicalize();
    CHECK(p.parts[0].contains(0));  // parts reordered by smallest member
    CHECK(p.part_of(3) == 1);
}

TEST_CASE("failed partition certificate and refutation") {
    auto g14 = gen_gallery14();
    auto outcome = is_failed_pd_partition(g14.graph, g14.partition);
    REQUIRE(certified(outcome));
    const auto& cert = std::get<FailedPartitionCertificate>(outcome);
    CHECK(cert.partition.size() == 3);
    REQUIRE(cert.witnesses.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK_FALSE(cert.witnesses[i].empty());
        // The unobserved residue never meets what the complement observes.
        VertexSet rest = cert.partition.parts[i].complement();
        VertexSet seen = closure(g14.graph, rest, ProcessMode::PowerDomination);
        CHECK((seen & cert.witnesses[i]).empty());
        CHECK((seen | cert.witnesses[i]) == g14.graph.vertices());
    }

    // A partition of a path always has a part whose complement observes all.
    auto refuted = is_failed_pd_partition(path(4), VertexPartition::of(4, {{0, 1}, {2, 3}}));
    REQUIRE_FALSE(certified(refuted));
    const auto& ref = std::get<PartitionRefutation>(refuted);
    CHECK(ref.part_index >= 0);
    CHECK(ref.trace.covers(path(4)));

    CHECK_THROWS_AS(
        check_failed_partition(path(4), VertexPartition::of(4, {{0, 1, 2, 3}}), ProcessMode::PowerDomination),
        std::invalid_argument);
}

TEST_CASE("minimal blocking sets on a star") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    // Power domination: a lone leaf sees only itself and the center, then the
    // center stalls against two hidden leaves. Removing the center plus two
    // leaves is blocking, and nothing smaller is.
    auto pd_blocks = minimal_blocking_sets(star, ProcessMode::PowerDomination);
    REQUIRE(pd_blocks.size() == 3);
    for (const auto& b : pd_blocks) {
        CHECK(b.count() == 3);
        CHECK(b.contains(0));
    }
    // Zero forcing: losing two leaves stalls the center, and singletons
    // never block, so the minimal blockers are exactly the leaf pairs.
    auto zf_blocks = minimal_blocking_sets(star, ProcessMode::ZeroForcing);
    REQUIRE(zf_blocks.size() == 3);
    for (const auto& b : zf_blocks) {
        CHECK(b.count() == 2);
        CHECK_FALSE(b.contains(0));
    }
}

TEST_CASE("blocking sets are minimal and antitone") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 3 + int(rng() % 6), 0.3);
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing}) {
            auto blocks = minimal_blocking_sets(g, mode);
            for (const auto& b : blocks) {
                CHECK_FALSE(oracle::covers_all(g, b.complement(), mode));
                for (int v : b) {
                    VertexSet smaller = b;
                    smaller.remove(v);
                    CHECK(oracle::covers_all(g, smaller.complement(), mode));
                }
            }
        }
    }
}

TEST_CASE("blocking enumeration refuses large graphs") {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < 19; ++i) e.push_back({i, i + 1});
    CHECK_THROWS_AS(minimal_blocking_sets(Graph(19, e), ProcessMode::PowerDomination),
                    std::length_error);
}

TEST_CASE("partition count against exhaustive enumeration") {
    std::mt19937 rng(7117);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + int(rng() % 3);  // Bell(5) = 52 partitions at most
        Graph g = oracle::random_connected_graph(rng, n, 0.35);
        for (ProcessMode mode : {ProcessMode::PowerDomination, ProcessMode::ZeroForcing}) {
            auto w = compute_ell(g, mode);
            REQUIRE(w.conclusive);
            CHECK(w.value == oracle::brute_ell(g, mode));
        }
    }
}

TEST_CASE("gallery graph values") {
    auto g14 = gen_gallery14();
    auto w1 = compute_ell(g14.graph, ProcessMode::PowerDomination);
    REQUIRE(w1.conclusive);
    CHECK(w1.value == 3);
    REQUIRE(w1.partition.has_value());
    CHECK(certified(is_failed_pd_partition(g14.graph, *w1.partition)));

    // One vertex past the default enumeration cap, so raise it explicitly.
    auto g19 = gen_gallery19();
    EllOptions wide;
    wide.blocking.max_n = 20;
    auto w2 = compute_ell(g19.graph, ProcessMode::PowerDomination, wide);
    REQUIRE(w2.conclusive);
    CHECK(w2.value == 4);

    CHECK(compute_ell(k33(), ProcessMode::PowerDomination).value == 1);
    CHECK(compute_ell(path(7), ProcessMode::PowerDomination).value == 1);
}

TEST_CASE("hints settle large instances without enumeration") {
    auto g19 = gen_gallery19();
    EllOptions opt;
    opt.blocking.max_n = 0;  // forbid the exhaustive route entirely
    opt.hints.push_back(g19.partition);
    auto w = compute_ell(g19.graph, ProcessMode::PowerDomination, opt);
    REQUIRE(w.conclusive);
    CHECK(w.value == 4);
    CHECK(w.exhaustive);

    // Without the hint the same options cannot conclude, but the interval
    // still brackets the answer.
    EllOptions bare;
    bare.blocking.max_n = 0;
    auto open = compute_ell(g19.graph, ProcessMode::PowerDomination, bare);
    CHECK_FALSE(open.conclusive);
    CHECK(open.lower >= 1);
    CHECK(open.upper >= 4);
    CHECK(open.lower <= 4);
}

TEST_CASE("local blocking condition") {
    auto gms = gen_gms(2, 1);
    CHECK(check_local_blocking(gms.graph, gms.partition, gms.u_sets));

    // Swapping an entry for a boundary vertex lets N[U] escape the part.
    int boundary = -1;
    for (int v : gms.partition.parts[0])
        if (!gms.graph.closed_neighborhood(v).is_subset_of(gms.partition.parts[0])) boundary = v;
    REQUIRE(boundary >= 0);
    auto broken = gms.u_sets;
    broken[0] = VertexSet::of(gms.graph.order(), {boundary});
    CHECK_FALSE(check_local_blocking(gms.graph, gms.partition, broken));

    // Structural misuse is rejected rather than reported as false.
    auto hollow = gms.u_sets;
    hollow[0] = VertexSet(gms.graph.order());
    CHECK_THROWS_AS(check_local_blocking(gms.graph, gms.partition, hollow), std::invalid_argument);
    auto leaky = gms.u_sets;
    leaky[0].add(gms.partition.parts[0].complement().first());
    CHECK_THROWS_AS(check_local_blocking(gms.graph, gms.partition, leaky), std::invalid_argument);

    // Path parts observe each other, so no U sets can witness failure.
    VertexPartition halves = VertexPartition::of(4, {{0, 1}, {2, 3}});
    std::vector<VertexSet> us = {VertexSet::of(4, {0}), VertexSet::of(4, {3})};
    CHECK_FALSE(check_local_blocking(path(4), halves, us));
}

TEST_CASE("product of failed partitions certifies on the product") {
    // C_4 splits into its two diagonals and both complements stall under
    // zero forcing, so the product partition has 4 certified parts.
    VertexPartition diag = VertexPartition::of(4, {{0, 2}, {1, 3}});
    Graph c4 = cycle(4);
    REQUIRE(certified(is_failed_zf_partition(c4, diag)));
    auto res = product_failed_partition(c4, diag, c4, diag, ProcessMode::ZeroForcing);
    CHECK(res.product.graph.order() == 16);
    CHECK(res.partition.size() == 4);
    CHECK(res.certificate.witnesses.size() == 4);
    CHECK(certified(check_failed_partition(res.product.graph, res.partition, ProcessMode::ZeroForcing)));

    // Power domination flavor on twin double stars.
    Graph ds = gen_doublestar(2, 2);
    auto lw = compute_ell(ds, ProcessMode::PowerDomination);
    REQUIRE(lw.conclusive);
    REQUIRE(lw.value == 2);
    REQUIRE(lw.partition.has_value());
    auto pd = product_failed_partition(ds, *lw.partition, ds, *lw.partition,
                                       ProcessMode::PowerDomination);
    CHECK(pd.partition.size() == 4);

    // A refutable input partition is rejected.
    VertexPartition bad = VertexPartition::of(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(product_failed_partition(c4, bad, c4, diag, ProcessMode::PowerDomination),
                    std::invalid_argument);
}

TEST_CASE("leaf path condition on small trees") {
    Graph p4 = path(4);
    auto rep = check_leaf_path(p4, VertexSet::full(4), 0, 3);
    CHECK(rep.verdict);
    CHECK(rep.path == std::vector<int>{0, 1, 2, 3});
    CHECK(rep.pd_status == std::vector<bool>{false, false, false, false});

    // Keeping only the endpoints lets the middle observe the whole path, so
    // adjacent observed path vertices appear and the verdict flips.
    auto bad = check_leaf_path(p4, VertexSet::of(4, {0, 3}), 0, 3);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.pd_status == std::vector<bool>{true, true, true, true});

    CHECK_THROWS_AS(check_leaf_path(p4, VertexSet::of(4, {0, 1}), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_leaf_path(p4, VertexSet::full(4), 1, 2), std::invalid_argument);
}

TEST_CASE("tree partition matches the spider cover size") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            auto res = tree_leaf_path_partition(t);
            CHECK(res.partition.size() == spider_cover_number(t).value);
            CHECK_NOTHROW(res.partition.validate());
            REQUIRE(res.reports.size() == size_t(res.partition.size()));
            for (const auto& rep : res.reports) CHECK(rep.verdict);
        }
    }
    CHECK_THROWS_AS(tree_leaf_path_partition(cycle(4)), std::invalid_argument);
}
