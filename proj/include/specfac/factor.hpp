#pragma once

#include <optional>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

/// Spanning collection of vertex-disjoint paths, each of order >= 2.
struct FactorWitness {
    std::vector<std::vector<int>> paths;
};

/// Re-validates a witness against the graph: disjointness, full
/// coverage, adjacency of consecutive vertices, minimum path order.
/// Independent of the search that produced it.
bool validate_witness(const Graph& g, const FactorWitness& w);

enum class ViolationKind { Deficiency, NontrivialComponent, NonIndependentSet };

/// A subset S certifying that one of the coveredness conditions fails:
/// isolated = i(G-S) exceeds the condition's bound.
struct Violation {
    ViolationKind kind;
    VertexSet s = 0;
    int isolated = 0;
    int bound = 0;
};

const char* violation_kind_name(ViolationKind k);

/// Scans every S subset of V(G) for i(G-S) <= 2|S|. On failure returns
/// the witness of maximum deficiency i(G-S)-2|S|, ties broken by
/// smaller |S|, then by smaller mask value. Order capped at 26.
std::optional<Violation> deficiency_check(const Graph& g);

/// Early-exit predicate: true iff deficiency_check(g) passes.
bool deficiency_pass(const Graph& g);

struct P2FactorResult {
    bool exists = false;
    std::optional<FactorWitness> witness;  // produced when order <= 16
};

/// Existence of a spanning set of vertex-disjoint paths of order >= 2.
/// Orders <= 16 run a direct tiling search over {P2, P3} pieces (any
/// longer path splits into such pieces) and reconstruct a witness;
/// orders 17..26 fall back to the subset criterion, no witness.
P2FactorResult has_p2_factor(const Graph& g);

/// Direct tiling existence (no witness), order <= 16. The independent
/// oracle side of the subset-criterion equivalence tests.
bool p2_tiling_exists(const Graph& g);

/// Subset-criterion test that every edge lies on some path factor:
/// for each S, (i) i(G-S) <= 2|S|; (ii) if S != {} and G-S has a
/// component of order >= 2, i(G-S) <= 2|S|-1; (iii) if G[S] has an
/// edge, i(G-S) <= 2|S|-2. Requires g connected. Returns the first
/// failing S in increasing mask order, or nullopt. Order capped at 32;
/// a pass at orders above 26 means a long full scan.
std::optional<Violation> is_covered_structural(const Graph& g);

/// Enumerative oracle for the same property: for every edge, searches
/// for a path factor using that edge. Requires g connected, order <= 12.
bool is_covered_direct(const Graph& g);

}  // namespace specfac
