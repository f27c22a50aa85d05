#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "specfac/factor.hpp"
#include "specfac/families.hpp"
#include "specfac/spectral.hpp"
#include "specfac/thresholds.hpp"

using namespace specfac;

namespace {

bool isomorphic_under(const Graph& a, const Graph& b, const std::vector<int>& perm) {
    if (a.order() != b.order()) return false;
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v) !=
                b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

}  // namespace

TEST_CASE("claim1 family") {
    const auto fam = claim1_graph(14);
    CHECK(fam.graph.order() == 14);
    CHECK(fam.meta.n1 == 10);
    CHECK(fam.graph.degree(0) == 13);                       // hub
    for (int v = 1; v <= 10; ++v) CHECK(fam.graph.degree(v) == 10);  // clique
    for (int v = 11; v <= 13; ++v) CHECK(fam.graph.degree(v) == 1);  // pendants
    CHECK(is_equitable(fam.graph, fam.partition));
    REQUIRE(fam.partition.blocks.size() == 3);
    CHECK(popcount(fam.partition.blocks[0]) == 3);
    CHECK(popcount(fam.partition.blocks[1]) == 10);
    CHECK(popcount(fam.partition.blocks[2]) == 1);
    // hub plus clique form a complete subgraph of order n-3
    for (int u = 0; u <= 10; ++u)
        for (int v = u + 1; v <= 10; ++v) CHECK(fam.graph.has_edge(u, v));
    CHECK_THROWS_AS(claim1_graph(5), std::invalid_argument);
}

TEST_CASE("extremal family") {
    const auto fam = extremal_graph(14);
    CHECK(fam.graph.order() == 14);
    CHECK(fam.graph.edge_count() == 68);
    CHECK(is_equitable(fam.graph, fam.partition));
    REQUIRE(fam.partition.blocks.size() == 3);
    CHECK(fam.partition.blocks[0] == VertexSet{1} << 11);  // middle vertex
    CHECK(popcount(fam.partition.blocks[1]) == 11);
    CHECK(popcount(fam.partition.blocks[2]) == 2);

    // same graph as K_1 v (K_{n-3} u 2K_1) after moving the hub label
    const Graph other = join(complete(1), disjoint_union(complete(11), empty_graph(2)));
    std::vector<int> perm(14);
    perm[0] = 11;  // hub becomes the middle vertex
    for (int v = 1; v <= 11; ++v) perm[static_cast<std::size_t>(v)] = v - 1;
    perm[12] = 12;
    perm[13] = 13;
    CHECK(isomorphic_under(other, fam.graph, perm));

    CHECK_THROWS_AS(extremal_graph(4), std::invalid_argument);
}

TEST_CASE("extremal graph is sharp and not covered") {
    for (int n = 5; n <= 20; ++n) {
        const auto fam = extremal_graph(n);
        const auto violation = is_covered_structural(fam.graph);
        REQUIRE(violation.has_value());
        CHECK(violation->kind == ViolationKind::NontrivialComponent);
        CHECK(violation->s == fam.partition.blocks[0]);
        CHECK(violation->isolated == 2);
        CHECK(violation->bound == 1);
        if (n <= 18) CHECK(has_p2_factor(fam.graph).exists);
        // deleting the middle block leaves the clique and two isolated vertices
        const Graph rest = induced_delete(fam.graph, fam.partition.blocks[0]);
        CHECK(isolated_count(rest) == 2);
        CHECK(connected_components(rest).size() == 3);
    }
}

TEST_CASE("case graphs") {
    const auto b1 = case_graph(CaseId::B1, 14, 2);
    CHECK(b1.meta.n1 == 8);
    CHECK(b1.meta.t == 4);
    REQUIRE(b1.partition.blocks.size() == 3);
    CHECK(popcount(b1.partition.blocks[0]) == 2);
    CHECK(popcount(b1.partition.blocks[1]) == 8);
    CHECK(popcount(b1.partition.blocks[2]) == 4);
    CHECK(is_connected(b1.graph));

    const auto b3 = case_graph(CaseId::B3, 14, 5);
    CHECK(b3.graph.order() == 14);
    CHECK(b3.meta.n1 == 0);
    REQUIRE(b3.partition.blocks.size() == 2);
    CHECK(popcount(b3.partition.blocks[0]) == 5);
    CHECK(popcount(b3.partition.blocks[1]) == 9);

    CHECK_THROWS_AS(case_graph(CaseId::B1, 7, 2), std::invalid_argument);
    CHECK_THROWS_AS(case_graph(CaseId::B2, 14, 1), std::invalid_argument);
    CHECK_THROWS_AS(case_graph(CaseId::B3, 15, 5), std::invalid_argument);
    CHECK_THROWS_AS(case_graph(CaseId::B4, 14, 5), std::invalid_argument);
    CHECK_THROWS_AS(case_graph(CaseId::B0, 14, 1), std::invalid_argument);
}

TEST_CASE("case graphs are equitable with the defining deficiency") {
    for (int s = 1; s <= 5; ++s) {
        for (int n = 3 * s + 2; n <= 20; n += 3) {
            const auto fam = case_graph(CaseId::B1, n, s);
            CHECK(is_equitable(fam.graph, fam.partition));
            CHECK(isolated_count(induced_delete(fam.graph, fam.partition.blocks[0])) == 2 * s);
        }
        if (s < 2) continue;
        for (int n = 3 * s + 1; n <= 20; n += 3) {
            const auto fam = case_graph(CaseId::B2, n, s);
            CHECK(is_equitable(fam.graph, fam.partition));
            CHECK(isolated_count(induced_delete(fam.graph, fam.partition.blocks[0])) == 2 * s - 1);
        }
        {
            const auto fam = case_graph(CaseId::B3, 3 * s - 1, s);
            CHECK(is_equitable(fam.graph, fam.partition));
            CHECK(isolated_count(induced_delete(fam.graph, fam.partition.blocks[0])) == 2 * s - 1);
        }
        {
            const auto fam = case_graph(CaseId::B4, 3 * s, s);
            CHECK(is_equitable(fam.graph, fam.partition));
            CHECK(isolated_count(induced_delete(fam.graph, fam.partition.blocks[0])) == 2 * s);
        }
    }
}

TEST_CASE("case graphs are not covered") {
    for (int s = 2; s <= 4; ++s) {
        CHECK(is_covered_structural(case_graph(CaseId::B1, 3 * s + 3, s).graph).has_value());
        CHECK(is_covered_structural(case_graph(CaseId::B2, 3 * s + 2, s).graph).has_value());
        CHECK(is_covered_structural(case_graph(CaseId::B3, 3 * s - 1, s).graph).has_value());
        CHECK(is_covered_structural(case_graph(CaseId::B4, 3 * s, s).graph).has_value());
    }
    CHECK(is_covered_structural(case_graph(CaseId::B1, 14, 1).graph).has_value());
}

TEST_CASE("B1 with a single hub vertex attains the threshold") {
    for (double alpha : {0.0, 0.5, 0.9}) {
        const auto fam = case_graph(CaseId::B1, 14, 1);
        CHECK(spectral_radius(a_alpha(fam.graph, alpha)) == doctest::Approx(eta(14, alpha)).epsilon(1e-9));
    }
}
