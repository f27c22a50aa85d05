#include <doctest.h>

#include <stdexcept>

#include "specfac/factor.hpp"
#include "specfac/families.hpp"
#include "specfac/graph.hpp"
#include "specfac/rng.hpp"

using namespace specfac;

TEST_CASE("deficiency scan") {
    const Graph star3 = join(complete(1), empty_graph(3));  // center = 0
    const auto v = deficiency_check(star3);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::Deficiency);
    CHECK(v->s == 0b0001);
    CHECK(v->isolated == 3);
    CHECK(v->bound == 2);

    CHECK_FALSE(deficiency_check(path_graph(4)).has_value());
    CHECK(deficiency_pass(path_graph(4)));
    CHECK_FALSE(deficiency_pass(star3));

    // boundary case: removing the hub of K_s v (K_{n-3s} u 2sK_1) isolates exactly 2s
    const auto fam = case_graph(CaseId::B1, 8, 2);
    CHECK(isolated_count(induced_delete(fam.graph, 0b11)) == 4);
    CHECK_FALSE(deficiency_check(fam.graph).has_value());

    CHECK_THROWS_AS(deficiency_check(path_graph(27)), std::invalid_argument);
}

TEST_CASE("deficiency witness maximizes the deficiency") {
    // double star: each center alone gives deficiency 1, both give 2
    Graph g(8);
    g.add_edge(0, 1);
    for (int leaf : {2, 3, 4}) g.add_edge(0, leaf);
    for (int leaf : {5, 6, 7}) g.add_edge(1, leaf);
    const auto v = deficiency_check(g);
    REQUIRE(v.has_value());
    CHECK(v->s == 0b0011);
    CHECK(v->isolated == 6);
    CHECK(v->bound == 4);

    // first positive-deficiency subset is not necessarily the maximum:
    // pendants hang off vertex 0, but deleting the whole left side of
    // the K_{3,7} wins (deficiency 4 over 1)
    Graph b(13);
    for (int l = 0; l < 3; ++l)
        for (int r = 3; r < 10; ++r) b.add_edge(l, r);
    for (int p : {10, 11, 12}) b.add_edge(0, p);
    const auto w = deficiency_check(b);
    REQUIRE(w.has_value());
    CHECK(w->s == 0b0111);
    CHECK(w->isolated == 10);
    CHECK(w->bound == 6);
}

TEST_CASE("path factor existence and witnesses") {
    const auto k2 = has_p2_factor(complete(2));
    CHECK(k2.exists);
    REQUIRE(k2.witness.has_value());
    CHECK(k2.witness->paths == std::vector<std::vector<int>>{{0, 1}});
    CHECK(validate_witness(complete(2), *k2.witness));

    CHECK_FALSE(has_p2_factor(join(complete(1), empty_graph(3))).exists);
    CHECK_FALSE(has_p2_factor(disjoint_union(complete(2), complete(1))).exists);
    CHECK_FALSE(has_p2_factor(empty_graph(3)).exists);

    for (int n : {2, 3, 5, 8, 13}) {
        const auto r = has_p2_factor(path_graph(n));
        CHECK(r.exists == (n >= 2));
        if (r.witness) CHECK(validate_witness(path_graph(n), *r.witness));
    }

    // criterion route without witness at orders 17..26
    const auto big = has_p2_factor(complete(20));
    CHECK(big.exists);
    CHECK_FALSE(big.witness.has_value());
    CHECK_THROWS_AS(has_p2_factor(path_graph(27)), std::invalid_argument);
    CHECK_THROWS_AS(p2_tiling_exists(path_graph(17)), std::invalid_argument);
}

TEST_CASE("witness validator rejects bad covers") {
    const Graph p4 = path_graph(4);
    CHECK(validate_witness(p4, FactorWitness{{{0, 1}, {2, 3}}}));
    CHECK_FALSE(validate_witness(p4, FactorWitness{{{0, 1}}}));          // not spanning
    CHECK_FALSE(validate_witness(p4, FactorWitness{{{0, 1}, {1, 2}, {2, 3}}}));  // overlap
    CHECK_FALSE(validate_witness(p4, FactorWitness{{{0, 2}, {1, 3}}}));  // non-edges
    CHECK_FALSE(validate_witness(p4, FactorWitness{{{0}, {1, 2, 3}}}));  // short path
    CHECK_FALSE(validate_witness(p4, FactorWitness{{{0, 1}, {2, 4}}}));  // out of range
}

TEST_CASE("coveredness criterion") {
    CHECK_FALSE(is_covered_structural(path_graph(3)).has_value());
    CHECK_FALSE(is_covered_structural(complete(4)).has_value());
    CHECK_FALSE(is_covered_structural(complete(2)).has_value());

    const Graph star3 = join(complete(1), empty_graph(3));
    const auto v = is_covered_structural(star3);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::Deficiency);
    CHECK(v->s == 0b0001);

    // K_1 v (K_3 u 2K_1): hub removal leaves a nontrivial component and 2 isolated
    const Graph g6 = join(complete(1), disjoint_union(complete(3), empty_graph(2)));
    const auto v6 = is_covered_structural(g6);
    REQUIRE(v6.has_value());
    CHECK(v6->kind == ViolationKind::NontrivialComponent);
    CHECK(v6->s == 0b000001);
    CHECK(v6->isolated == 2);
    CHECK(v6->bound == 1);

    CHECK_THROWS_AS(is_covered_structural(empty_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(is_covered_structural(path_graph(33)), std::invalid_argument);
}

TEST_CASE("non-independent hub sets are caught") {
    // K_2 v 3K_1: S = the K_2 block has an edge, i = 3 > 2|S|-2
    const Graph g = join(complete(2), empty_graph(3));
    const auto v = is_covered_structural(g);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::NonIndependentSet);
    CHECK(v->s == 0b00011);
    CHECK(v->isolated == 3);
    CHECK(v->bound == 2);
}

TEST_CASE("direct path-cover oracle") {
    CHECK(is_covered_direct(path_graph(3)));
    CHECK(is_covered_direct(complete(2)));
    CHECK(is_covered_direct(complete(4)));
    // the middle edge of P_4 needs the whole path as its block
    CHECK(is_covered_direct(path_graph(4)));
    // cycle: every edge sits in a perfect matching or a P3 tiling
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(is_covered_direct(c4));

    CHECK_FALSE(is_covered_direct(join(complete(1), disjoint_union(complete(3), empty_graph(2)))));
    CHECK_FALSE(is_covered_direct(join(complete(1), empty_graph(3))));

    CHECK_THROWS_AS(is_covered_direct(path_graph(13)), std::invalid_argument);
    CHECK_THROWS_AS(is_covered_direct(empty_graph(2)), std::invalid_argument);
}

TEST_CASE("oracle equivalence, exhaustive small orders") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < masks; ++m) {
            const Graph g = from_upper_triangle_bits(n, m);
            if (!is_connected(g)) continue;
            const bool criterion = deficiency_pass(g);
            const bool search = p2_tiling_exists(g);
            if (criterion != search) FAIL("factor mismatch at n=", n, " mask=", m);
            const bool covered_criterion = !is_covered_structural(g).has_value();
            const bool covered_search = is_covered_direct(g);
            if (covered_criterion != covered_search) FAIL("covered mismatch at n=", n, " mask=", m);
        }
    }
}

TEST_CASE("oracle equivalence, random orders 9-12") {
    SplitMix64 rng(2718281828);
    for (int it = 0; it < 10000; ++it) {
        const int n = 9 + static_cast<int>(rng.next() % 4);
        const Graph g = random_graph(n, 0.15 + 0.7 * rng.next_unit(), rng);
        const auto full = deficiency_check(g);
        const auto r = has_p2_factor(g);
        CHECK(full.has_value() != r.exists);
        CHECK(deficiency_pass(g) == r.exists);
        if (r.witness) CHECK(validate_witness(g, *r.witness));
    }
}

TEST_CASE("adding an edge never destroys a factor") {
    SplitMix64 rng(13);
    int done = 0;
    while (done < 1000) {
        const int n = 4 + static_cast<int>(rng.next() % 9);
        Graph g = random_graph(n, 0.4, rng);
        if (!p2_tiling_exists(g)) continue;
        const int u = static_cast<int>(rng.next() % n);
        const int v = static_cast<int>(rng.next() % n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        CHECK(p2_tiling_exists(g));
        ++done;
    }
}

TEST_CASE("covered implies factor") {
    SplitMix64 rng(99);
    int done = 0;
    while (done < 400) {
        const int n = 3 + static_cast<int>(rng.next() % 8);
        const Graph g = random_connected_graph(n, 0.5, rng);
        if (!is_covered_structural(g).has_value()) {
            CHECK(p2_tiling_exists(g));
            ++done;
        }
    }
}
