#pragma once

#include <string>

#include "specfac/graph.hpp"
#include "specfac/spectral.hpp"
#include "specfac/thresholds.hpp"

namespace specfac {

struct FamilyMeta {
    std::string family;
    int n = 0;
    int s = 0;
    int n1 = 0;  // order of the nontrivial non-hub component, 0 if none
    int t = 0;   // number of isolated vertices split off by the hub set
};

/// A named graph together with its equitable partition, blocks ordered
/// exactly as the corresponding quotient-matrix rows.
struct FamilyInstance {
    Graph graph;
    Partition partition;
    FamilyMeta meta;
};

/// K_1 v (K_{n-4} u 3K_1), blocks (3K_1, K_{n-4}, K_1). Its quotient is
/// the B0 matrix and its spectral radius is theta(n).
FamilyInstance claim1_graph(int n);

/// K_{n-3} v K_1 v complement(K_2), blocks (K_1, K_{n-3}, K2bar). Its
/// spectral radius is eta(n) and it is not covered: deleting the middle
/// vertex isolates the last two.
FamilyInstance extremal_graph(int n);

/// The B1..B4 case graphs K_s v (K_{n1} u tK_1) with their partitions:
///   B1: n1 = n-3s   >= 2, t = 2s      B2: n1 = n-3s+1 >= 2, t = 2s-1
///   B3: n1 = 0 (n == 3s-1), t = 2s-1  B4: n1 = 0 (n == 3s), t = 2s
FamilyInstance case_graph(CaseId id, int n, int s);

}  // namespace specfac
