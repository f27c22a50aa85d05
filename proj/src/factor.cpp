#include "specfac/factor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace specfac {

namespace {

constexpr int kSubsetScanCap = 26;
constexpr int kCoveredScanCap = 32;
constexpr int kTilingCap = 16;
constexpr int kDirectCap = 12;

// Vertices ordered by ascending degree; a vertex can only be isolated
// by S when deg(v) <= |S|, so the scan of a mask breaks early.
struct DegreeOrder {
    std::array<int, kMaxVertices> vertex;
    std::array<int, kMaxVertices> degree;
    int n;

    explicit DegreeOrder(const Graph& g) : n(g.order()) {
        for (int v = 0; v < n; ++v) vertex[static_cast<std::size_t>(v)] = v;
        std::sort(vertex.begin(), vertex.begin() + n,
                  [&](int u, int v) { return g.degree(u) < g.degree(v); });
        for (int k = 0; k < n; ++k) degree[static_cast<std::size_t>(k)] = g.degree(vertex[static_cast<std::size_t>(k)]);
    }
};

int isolated_after_removal(const Graph& g, const DegreeOrder& ord, VertexSet s, int s_size) {
    int count = 0;
    const VertexSet rest = ~s;
    for (int k = 0; k < ord.n; ++k) {
        if (ord.degree[static_cast<std::size_t>(k)] > s_size) break;
        const int v = ord.vertex[static_cast<std::size_t>(k)];
        if ((s >> v) & 1u) continue;
        if ((g.neighbors(v) & rest) == 0) ++count;
    }
    return count;
}

bool set_has_edge(const Graph& g, VertexSet s) {
    VertexSet rest = s;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & s) return true;
    }
    return false;
}

}  // namespace

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Deficiency: return "DEFICIENCY";
        case ViolationKind::NontrivialComponent: return "NONTRIVIAL_COMPONENT";
        case ViolationKind::NonIndependentSet: return "NON_INDEPENDENT_S";
    }
    return "?";
}

std::optional<Violation> deficiency_check(const Graph& g) {
    const int n = g.order();
    if (n > kSubsetScanCap) throw std::invalid_argument("deficiency_check: order exceeds 26");
    const DegreeOrder ord(g);
    int best_def = 0, best_size = 0, best_iso = 0;
    VertexSet best_s = 0;
    bool found = false;
    const VertexSet limit = full_set(n);
    for (VertexSet s = 0;; ++s) {
        const int size = popcount(s);
        const int iso = isolated_after_removal(g, ord, s, size);
        const int def = iso - 2 * size;
        if (def > 0 && (!found || def > best_def || (def == best_def && size < best_size))) {
            found = true;
            best_def = def;
            best_size = size;
            best_iso = iso;
            best_s = s;
        }
        if (s == limit) break;
    }
    if (!found) return std::nullopt;
    return Violation{ViolationKind::Deficiency, best_s, best_iso, 2 * best_size};
}

bool deficiency_pass(const Graph& g) {
    const int n = g.order();
    if (n > kSubsetScanCap) throw std::invalid_argument("deficiency_pass: order exceeds 26");
    const DegreeOrder ord(g);
    const VertexSet limit = full_set(n);
    for (VertexSet s = 0;; ++s) {
        const int size = popcount(s);
        if (isolated_after_removal(g, ord, s, size) > 2 * size) return false;
        if (s == limit) break;
    }
    return true;
}

std::optional<Violation> is_covered_structural(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("is_covered_structural: input must be connected");
    const int n = g.order();
    if (n > kCoveredScanCap) throw std::invalid_argument("is_covered_structural: order exceeds 32");
    const DegreeOrder ord(g);
    const VertexSet limit = full_set(n);
    for (VertexSet s = 0;; ++s) {
        const int size = popcount(s);
        const int iso = isolated_after_removal(g, ord, s, size);
        if (iso > 2 * size) return Violation{ViolationKind::Deficiency, s, iso, 2 * size};
        if (s != 0 && iso == 2 * size && n - size - iso > 0)
            return Violation{ViolationKind::NontrivialComponent, s, iso, 2 * size - 1};
        if (iso > 2 * size - 2 && set_has_edge(g, s))
            return Violation{ViolationKind::NonIndependentSet, s, iso, 2 * size - 2};
        if (s == limit) break;
    }
    return std::nullopt;
}

namespace {

// dp[mask] == 1 iff the vertex set `mask` partitions into paths of
// order 2 or 3 of G. Computed lazily, memoized per call.
class TilingTable {
public:
    explicit TilingTable(const Graph& g)
        : g_(g), memo_(static_cast<std::size_t>(1) << g.order(), kUnknown) {
        memo_[0] = 1;
    }

    bool solvable(VertexSet mask) {
        std::int8_t& slot = memo_[mask];
        if (slot != kUnknown) return slot == 1;
        slot = 0;  // guards against revisiting; masks shrink strictly
        const int v = std::countr_zero(mask);
        const VertexSet rest = mask & (mask - 1);  // mask minus v
        VertexSet nv = g_.neighbors(v) & rest;
        // P2 {v,u} and endpoint-P3 {v,u,w}
        VertexSet nv_it = nv;
        while (nv_it) {
            const int u = std::countr_zero(nv_it);
            nv_it &= nv_it - 1;
            const VertexSet after_vu = rest & ~(VertexSet{1} << u);
            if (solvable(after_vu)) { slot = 1; return true; }
            VertexSet nu = g_.neighbors(u) & after_vu;
            while (nu) {
                const int w = std::countr_zero(nu);
                nu &= nu - 1;
                if (solvable(after_vu & ~(VertexSet{1} << w))) { slot = 1; return true; }
            }
        }
        // center-P3 {u,v,w}, u and w both neighbors of v
        nv_it = nv;
        while (nv_it) {
            const int u = std::countr_zero(nv_it);
            nv_it &= nv_it - 1;
            VertexSet higher = nv_it;  // ensures u < w, each pair once
            const VertexSet after_vu = rest & ~(VertexSet{1} << u);
            while (higher) {
                const int w = std::countr_zero(higher);
                higher &= higher - 1;
                if (solvable(after_vu & ~(VertexSet{1} << w))) { slot = 1; return true; }
            }
        }
        return false;
    }

    // Rebuilds one tiling by replaying the successful branches.
    void extract(VertexSet mask, std::vector<std::vector<int>>& out) {
        if (mask == 0) return;
        const int v = std::countr_zero(mask);
        const VertexSet rest = mask & (mask - 1);
        VertexSet nv_it = g_.neighbors(v) & rest;
        while (nv_it) {
            const int u = std::countr_zero(nv_it);
            nv_it &= nv_it - 1;
            const VertexSet after_vu = rest & ~(VertexSet{1} << u);
            if (solvable(after_vu)) {
                out.push_back({v, u});
                extract(after_vu, out);
                return;
            }
            VertexSet nu = g_.neighbors(u) & after_vu;
            while (nu) {
                const int w = std::countr_zero(nu);
                nu &= nu - 1;
                const VertexSet next = after_vu & ~(VertexSet{1} << w);
                if (solvable(next)) {
                    out.push_back({v, u, w});
                    extract(next, out);
                    return;
                }
            }
        }
        nv_it = g_.neighbors(v) & rest;
        while (nv_it) {
            const int u = std::countr_zero(nv_it);
            nv_it &= nv_it - 1;
            VertexSet higher = nv_it;
            const VertexSet after_vu = rest & ~(VertexSet{1} << u);
            while (higher) {
                const int w = std::countr_zero(higher);
                higher &= higher - 1;
                const VertexSet next = after_vu & ~(VertexSet{1} << w);
                if (solvable(next)) {
                    out.push_back({u, v, w});
                    extract(next, out);
                    return;
                }
            }
        }
        throw std::logic_error("tiling extraction on an unsolvable mask");
    }

private:
    static constexpr std::int8_t kUnknown = -1;
    const Graph& g_;
    std::vector<std::int8_t> memo_;
};

}  // namespace

bool p2_tiling_exists(const Graph& g) {
    if (g.order() > kTilingCap) throw std::invalid_argument("p2_tiling_exists: order exceeds 16");
    TilingTable t(g);
    return t.solvable(g.vertices());
}

P2FactorResult has_p2_factor(const Graph& g) {
    const int n = g.order();
    if (n <= kTilingCap) {
        TilingTable t(g);
        P2FactorResult res;
        res.exists = t.solvable(g.vertices());
        if (res.exists) {
            FactorWitness w;
            t.extract(g.vertices(), w.paths);
            res.witness = std::move(w);
        }
        return res;
    }
    if (n <= kSubsetScanCap) return P2FactorResult{deficiency_pass(g), std::nullopt};
    throw std::invalid_argument("has_p2_factor: order exceeds 26");
}

bool validate_witness(const Graph& g, const FactorWitness& w) {
    VertexSet covered = 0;
    for (const auto& path : w.paths) {
        if (path.size() < 2) return false;
        for (std::size_t k = 0; k < path.size(); ++k) {
            const int v = path[k];
            if (v < 0 || v >= g.order()) return false;
            if ((covered >> v) & 1u) return false;
            covered |= VertexSet{1} << v;
            if (k > 0 && !g.has_edge(path[k - 1], v)) return false;
        }
    }
    return covered == g.vertices();
}

bool is_covered_direct(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_covered_direct: input must be connected");
    const int n = g.order();
    if (n > kDirectCap) throw std::invalid_argument("is_covered_direct: order exceeds 12");
    TilingTable t(g);
    const VertexSet full = g.vertices();
    const VertexSet one = 1;
    // a covered graph has a factor in the first place; this also settles
    // the edgeless K_1, which the subset criterion rejects at S = {}
    if (!t.solvable(full)) return false;

    // The block containing edge (x,y) in some factor can always be taken
    // as a P2, a P3 with (x,y) as one of its edges, or a P4 with (x,y)
    // in the middle; everything else tiles into P2/P3 pieces.
    for (int x = 0; x < n; ++x) {
        VertexSet ny = g.neighbors(x) & ~((one << (x + 1)) - 1);  // y > x, each edge once
        while (ny) {
            const int y = std::countr_zero(ny);
            ny &= ny - 1;
            const VertexSet without_xy = full & ~(one << x) & ~(one << y);
            bool ok = t.solvable(without_xy);
            if (!ok) {
                VertexSet wx = g.neighbors(x) & without_xy;
                while (!ok && wx) {
                    const int w = std::countr_zero(wx);
                    wx &= wx - 1;
                    ok = t.solvable(without_xy & ~(one << w));
                }
                VertexSet zy = g.neighbors(y) & without_xy;
                while (!ok && zy) {
                    const int z = std::countr_zero(zy);
                    zy &= zy - 1;
                    ok = t.solvable(without_xy & ~(one << z));
                }
                wx = g.neighbors(x) & without_xy;
                while (!ok && wx) {
                    const int w = std::countr_zero(wx);
                    wx &= wx - 1;
                    VertexSet zz = g.neighbors(y) & without_xy & ~(one << w);
                    while (!ok && zz) {
                        const int z = std::countr_zero(zz);
                        zz &= zz - 1;
                        ok = t.solvable(without_xy & ~(one << w) & ~(one << z));
                    }
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace specfac
