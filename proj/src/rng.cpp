#include "specfac/rng.hpp"

#include <stdexcept>

namespace specfac {

Graph random_graph(int n, double p, SplitMix64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double p, SplitMix64& rng) {
    for (long attempt = 0; attempt < 1000000; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("rejection sampling for a connected graph did not succeed");
}

}  // namespace specfac
