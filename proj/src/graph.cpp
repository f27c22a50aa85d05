#include "specfac/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace specfac {

int popcount(VertexSet s) { return std::popcount(s); }

VertexSet full_set(int n) {
    return n == 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
}

void check_combined(int a, int b) {
    if (a + b > kMaxVertices)
        throw std::invalid_argument("combined order exceeds 64");
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { check_order(n); }

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("bad edge endpoints");
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    check_combined(g1.order(), g2.order());
    Graph g(g1.order() + g2.order());
    const int off = g1.order();
    for (int u = 0; u < g1.order(); ++u)
        for (int v = u + 1; v < g1.order(); ++v)
            if (g1.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < g2.order(); ++u)
        for (int v = u + 1; v < g2.order(); ++v)
            if (g2.has_edge(u, v)) g.add_edge(u + off, v + off);
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph sequential_join(std::span<const Graph> parts) {
    if (parts.size() < 2) throw std::invalid_argument("sequential join needs at least 2 parts");
    Graph g = parts[0];
    int prev_off = 0;
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const int off = g.order();
        const int prev_n = off - prev_off;
        g = disjoint_union(g, parts[k]);
        for (int u = 0; u < prev_n; ++u)
            for (int v = 0; v < parts[k].order(); ++v) g.add_edge(prev_off + u, off + v);
        prev_off = off;
    }
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_delete(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw std::invalid_argument("vertex set not contained in V(G)");
    const VertexSet keep = g.vertices() & ~s;
    const int m = popcount(keep);
    if (m == 0) throw std::invalid_argument("deleting all vertices leaves an empty graph");
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) relabel[static_cast<std::size_t>(v)] = next++;
    Graph h(m);
    for (int u = 0; u < g.order(); ++u) {
        if (!((keep >> u) & 1u)) continue;
        VertexSet nb = g.neighbors(u) & keep;
        while (nb) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v > u) h.add_edge(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
        }
    }
    return h;
}

int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) ++c;
    return c;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unvisited = g.vertices();
    while (unvisited) {
        const int v = std::countr_zero(unvisited);
        VertexSet comp = VertexSet{1} << v;
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            VertexSet f = frontier;
            while (f) {
                const int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u);
            }
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        unvisited &= ~comp;
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph from_upper_triangle_bits(int n, std::uint64_t bits) {
    check_order(n);
    const int pairs = n * (n - 1) / 2;
    if (pairs > 64) throw std::invalid_argument("order too large for a single-word edge mask");
    if (pairs < 64 && (bits >> pairs) != 0) throw std::invalid_argument("edge mask has bits beyond n*(n-1)/2");
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> k) & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace specfac
