#include "specfac/families.hpp"

#include <array>
#include <stdexcept>

namespace specfac {

namespace {

VertexSet range_mask(int lo, int hi) {  // vertices [lo, hi)
    VertexSet m = 0;
    for (int v = lo; v < hi; ++v) m |= VertexSet{1} << v;
    return m;
}

// K_s v (K_{n1} u tK_1) labeled hub-first: K_s = 0..s-1,
// K_{n1} = s..s+n1-1, isolated part after that.
Graph hub_split_graph(int s, int n1, int t) {
    const Graph hub = complete(s);
    const Graph outside = (n1 > 0) ? disjoint_union(complete(n1), empty_graph(t)) : empty_graph(t);
    return join(hub, outside);
}

}  // namespace

FamilyInstance claim1_graph(int n) {
    if (n < 6) throw std::invalid_argument("claim1_graph requires n >= 6");
    Graph g = hub_split_graph(1, n - 4, 3);
    Partition pi{{range_mask(n - 3, n), range_mask(1, n - 3), range_mask(0, 1)}};
    return FamilyInstance{std::move(g), std::move(pi), FamilyMeta{"claim1", n, 1, n - 4, 3}};
}

FamilyInstance extremal_graph(int n) {
    if (n < 5) throw std::invalid_argument("extremal_graph requires n >= 5");
    const std::array<Graph, 3> parts{complete(n - 3), complete(1), empty_graph(2)};
    Graph g = sequential_join(parts);
    // clique = 0..n-4, middle = n-3, the two nonadjacent ends last
    Partition pi{{range_mask(n - 3, n - 2), range_mask(0, n - 3), range_mask(n - 2, n)}};
    return FamilyInstance{std::move(g), std::move(pi), FamilyMeta{"extremal", n, 1, n - 3, 2}};
}

FamilyInstance case_graph(CaseId id, int n, int s) {
    int n1 = 0, t = 0;
    const char* family = nullptr;
    switch (id) {
        case CaseId::B1:
            if (s < 1 || n < 3 * s + 2) throw std::invalid_argument("B1 requires s >= 1 and n >= 3s+2");
            n1 = n - 3 * s;
            t = 2 * s;
            family = "case-b1";
            break;
        case CaseId::B2:
            if (s < 2 || n < 3 * s + 1) throw std::invalid_argument("B2 requires s >= 2 and n >= 3s+1");
            n1 = n - 3 * s + 1;
            t = 2 * s - 1;
            family = "case-b2";
            break;
        case CaseId::B3:
            if (s < 2 || n != 3 * s - 1) throw std::invalid_argument("B3 requires s >= 2 and n == 3s-1");
            n1 = 0;
            t = 2 * s - 1;
            family = "case-b3";
            break;
        case CaseId::B4:
            if (s < 2 || n != 3 * s) throw std::invalid_argument("B4 requires s >= 2 and n == 3s");
            n1 = 0;
            t = 2 * s;
            family = "case-b4";
            break;
        case CaseId::B0:
            throw std::invalid_argument("B0 is claim1_graph(n)");
    }
    if (n > kMaxVertices) throw std::invalid_argument("case graph order exceeds 64");
    Graph g = hub_split_graph(s, n1, t);
    Partition pi;
    pi.blocks.push_back(range_mask(0, s));
    if (n1 > 0) pi.blocks.push_back(range_mask(s, s + n1));
    pi.blocks.push_back(range_mask(s + n1, n));
    return FamilyInstance{std::move(g), std::move(pi), FamilyMeta{family, n, s, n1, t}};
}

}  // namespace specfac
