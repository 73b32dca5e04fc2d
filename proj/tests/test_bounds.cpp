#include <doctest.h>

#include <stdexcept>

#include "powerdom/bounds.hpp"
#include "powerdom/families.hpp"

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

}  // namespace

TEST_CASE("cut decomposition") {
    auto dec = decompose_along_cut(path(5), {2});
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0].to_vector() == std::vector<int>{0, 1});
    CHECK(dec.parts[1].to_vector() == std::vector<int>{3, 4});
    CHECK(dec.h[0].graph.order() == 2);
    CHECK(dec.k[0].graph.order() == 3);  // part plus the cut vertex

    CHECK_THROWS_AS(decompose_along_cut(path(5), {}), std::invalid_argument);
    CHECK_THROWS_AS(decompose_along_cut(path(5), {9}), std::invalid_argument);
    CHECK_THROWS_AS(decompose_along_cut(path(5), {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(decompose_along_cut(path(5), {4}), std::invalid_argument);  // one piece left
    CHECK_THROWS_AS(decompose_along_cut(path(2), {0, 1}), std::invalid_argument);
}

TEST_CASE("cut decomposition with grouped components") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto dec = decompose_along_cut(star, {0}, {{0, 2}, {1}});
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0].to_vector() == std::vector<int>{1, 3});
    CHECK(dec.parts[1].to_vector() == std::vector<int>{2});

    CHECK_THROWS_AS(decompose_along_cut(star, {0}, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(decompose_along_cut(star, {0}, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(decompose_along_cut(star, {0}, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("sandwich bounds collapse on the subdivided star chain") {
    auto f = gen_gms(2, 1);
    auto r = cutset_bounds(f.graph, f.cut);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 3);
    REQUIRE(r.find("cut_lower") != nullptr);
    REQUIRE(r.find("cut_upper") != nullptr);
    CHECK(r.find("cut_lower")->value == 3);
    CHECK(r.find("cut_upper")->value == 3);
    CHECK(r.all_hold());
    CHECK_FALSE(r.partial);
}

TEST_CASE("sandwich bounds stay ordered when loose") {
    auto f = gen_overlap_example(3);
    auto r = cutset_bounds(f.graph, f.cut);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 1);
    CHECK(r.find("cut_lower")->value == 0);
    CHECK(r.find("cut_upper")->value == 6);
    CHECK(r.all_hold());
}

TEST_CASE("assembled local covers beat the coarse upper bound") {
    auto f = gen_overlap_example(3);
    auto r = generalized_upper(f.graph, f.cut, f.cut_choice);
    REQUIRE(r.find("local_upper") != nullptr);
    CHECK(r.find("local_upper")->value == 4);
    CHECK(r.all_hold());
    CHECK_FALSE(r.partial);

    auto coarse = cutset_bounds(f.graph, f.cut);
    CHECK(r.find("local_upper")->value < coarse.find("cut_upper")->value);

    // Choice lists must index into the cut.
    CHECK_THROWS_AS(generalized_upper(f.graph, f.cut, {{f.cut[0]}, {5}}), std::invalid_argument);
}

TEST_CASE("degree ratio floor") {
    auto r = check_degree_ratio_bound(gen_complete_bipartite(3, 3));
    CHECK(r.find("max_degree")->value == 3);
    CHECK(r.find("zero_forcing")->value == 4);
    CHECK(r.find("ratio_lower")->value == 2);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 2);
    CHECK(r.all_hold());

    auto p = check_degree_ratio_bound(path(6));
    CHECK(p.find("ratio_lower")->value == 1);
    CHECK(p.all_hold());

    CHECK_THROWS_AS(check_degree_ratio_bound(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("product bounds, exact route") {
    auto r = check_product_bounds(gen_path(3), gen_path(6));
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 1);
    CHECK(r.find("pd_g")->value == 1);
    CHECK(r.find("pd_h")->value == 1);
    CHECK(r.find("ell_g")->value == 1);
    CHECK(r.find("partition_lower")->value == 1);
    CHECK(r.find("tree_lower")->value == 1);
    CHECK(r.all_hold());
    CHECK_FALSE(r.partial);
}

TEST_CASE("product bounds, refutation route") {
    // 7x7 product vertices: too big for the exact scan, so the factor bound
    // gamma_P(T1) * gamma_P(T2) = 4 arrives by refuting every 3-subset.
    Graph ds = gen_doublestar(2, 2);
    auto r = check_product_bounds(ds, ds);
    CHECK_FALSE(r.exact.has_value());
    CHECK(r.find("tree_lower")->value == 4);
    REQUIRE(r.find("product_lower") != nullptr);
    CHECK(r.find("product_lower")->value == 4);
    CHECK(r.all_hold());
    CHECK_FALSE(r.partial);
}

TEST_CASE("product vertex cap") {
    Graph p10 = gen_path(10);
    ProductBoundOptions opt;
    opt.max_vertices = 50;
    CHECK_THROWS_AS(check_product_bounds(p10, p10, opt), std::length_error);
}

TEST_CASE("forcing product bounds, exact route") {
    Graph p2 = gen_path(2);
    auto r = check_product_forcing_bounds(p2, p2);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 2);  // the 4-cycle
    CHECK(r.find("forcing_lower")->value == 1);
    CHECK(r.all_hold());
}

TEST_CASE("forcing product bounds, partition route") {
    // Both 4-cycles split into failed diagonal pairs, so the product bound 4
    // is certified by a partition instead of a subset sweep.
    Graph c4 = cycle(4);
    ProductBoundOptions opt;
    opt.exact_max_vertices = 0;
    auto r = check_product_forcing_bounds(c4, c4, opt);
    CHECK(r.find("forcing_lower")->value == 4);
    REQUIRE(r.find("product_partition_parts") != nullptr);
    CHECK(r.find("product_partition_parts")->value == 4);
    bool saw_cert = false;
    for (const auto& [name, ok] : r.holds)
        if (name == "product_partition_certified") saw_cert = ok;
    CHECK(saw_cert);
    CHECK(r.all_hold());
    CHECK_FALSE(r.partial);
}
