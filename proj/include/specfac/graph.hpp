#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace specfac {

/// Vertex subsets are one machine word; vertex i is bit (1 << i).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

int popcount(VertexSet s);
VertexSet full_set(int n);

/// Undirected simple graph on at most 64 vertices, adjacency as
/// per-vertex bitsets. Immutable by convention once built: the
/// constructors below and the harness are the only writers.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    std::size_t edge_count() const;
    VertexSet vertices() const { return full_set(n_); }

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<VertexSet> adj_;
};

Graph complete(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph sequential_join(std::span<const Graph> parts);
Graph complement(const Graph& g);

/// G - S with the remaining vertices relabeled in increasing order.
Graph induced_delete(const Graph& g, VertexSet s);

int isolated_count(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Builds a graph of order n from the bits of `bits` taken in
/// column-major upper-triangle order: (0,1),(0,2),(1,2),(0,3),...
/// Requires n*(n-1)/2 <= 64. Shared convention with graph6.
Graph from_upper_triangle_bits(int n, std::uint64_t bits);

}  // namespace specfac
