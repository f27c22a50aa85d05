#include "specfac/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "specfac/tolerances.hpp"

namespace specfac {

double SymMatrix::trace() const {
    double t = 0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::inf_norm() const {
    double best = 0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0;
        for (int j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

double SymMatrix::frob_norm() const {
    double s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

SymMatrix a_alpha(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
    const int n = g.order();
    SymMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m(v, v) = alpha * g.degree(v);
        VertexSet nb = g.neighbors(v);
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            m(v, u) = 1.0 - alpha;
        }
    }
    return m;
}

namespace {

double offdiag_frob(const SymMatrix& m) {
    double s = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> eigenvalues(SymMatrix m) {
    const int n = m.dim();
    const double target = kTol.jacobi_offdiag_rel * std::max(m.frob_norm(), 1e-300);
    for (int sweep = 0; sweep < kTol.jacobi_max_sweeps; ++sweep) {
        if (offdiag_frob(m) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                m(p, p) -= t * apq;
                m(q, q) += t * apq;
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = m(i, p);
                    const double aiq = m(i, q);
                    m(i, p) = aip - s * (aiq + tau * aip);
                    m(i, q) = aiq + s * (aip - tau * aiq);
                    m(p, i) = m(i, p);
                    m(q, i) = m(i, q);
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

double spectral_radius(const SymMatrix& m) { return eigenvalues(m).front(); }

namespace {

void validate_partition(const Graph& g, const Partition& pi) {
    if (pi.blocks.empty()) throw std::invalid_argument("partition: no blocks");
    VertexSet seen = 0;
    for (VertexSet b : pi.blocks) {
        if (b == 0) throw std::invalid_argument("partition: empty block");
        if (b & ~g.vertices()) throw std::invalid_argument("partition: block outside V(G)");
        if (b & seen) throw std::invalid_argument("partition: overlapping blocks");
        seen |= b;
    }
    if (seen != g.vertices()) throw std::invalid_argument("partition: blocks do not cover V(G)");
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& pi) {
    validate_partition(g, pi);
    for (VertexSet bi : pi.blocks) {
        for (VertexSet bj : pi.blocks) {
            int expect = -1;
            VertexSet rest = bi;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                const int cnt = popcount(g.neighbors(v) & bj);
                if (expect < 0) expect = cnt;
                else if (cnt != expect) return false;
            }
        }
    }
    return true;
}

QuotientMatrix quotient(const Graph& g, double alpha, const Partition& pi) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
    validate_partition(g, pi);
    const int r = static_cast<int>(pi.blocks.size());
    QuotientMatrix q;
    q.dim = r;
    q.blocks = pi;
    q.entries.assign(static_cast<std::size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) {
        const VertexSet bi = pi.blocks[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            const VertexSet bj = pi.blocks[static_cast<std::size_t>(j)];
            double sum = 0;
            VertexSet rest = bi;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                sum += (1.0 - alpha) * popcount(g.neighbors(v) & bj);
                if (i == j) sum += alpha * g.degree(v);
            }
            q.entries[static_cast<std::size_t>(i) * r + j] = sum / popcount(bi);
        }
    }
    return q;
}

double QuotientMatrix::trace() const {
    double t = 0;
    for (int i = 0; i < dim; ++i) t += (*this)(i, i);
    return t;
}

Cubic characteristic_cubic(const QuotientMatrix& q) {
    if (q.dim != 3) throw std::invalid_argument("characteristic_cubic needs dim == 3");
    const auto& m = q;
    const double tr = m.trace();
    // sum of principal 2x2 minors
    double m2 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) m2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return Cubic{1.0, -tr, m2, -det};
}

Quadratic characteristic_quadratic(const QuotientMatrix& q) {
    if (q.dim != 2) throw std::invalid_argument("characteristic_quadratic needs dim == 2");
    const double det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
    return Quadratic{1.0, -q.trace(), det};
}

namespace {

double power_iteration(const QuotientMatrix& q) {
    const int n = q.dim;
    std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(static_cast<std::size_t>(n));
    double lambda = 0;
    for (long it = 0; it < kTol.power_max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += q(i, j) * v[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(i)] = s;
        }
        double num = 0, den = 0;
        for (int i = 0; i < n; ++i) {
            num += w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
            den += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        const double next = num / den;
        double norm = 0;
        for (double x : w) norm = std::max(norm, std::abs(x));
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / norm;
        if (it > 0 && std::abs(next - lambda) <= kTol.power_rel * std::max(1.0, std::abs(next))) return next;
        lambda = next;
    }
    throw std::runtime_error("power iteration did not converge");
}

}  // namespace

double quotient_largest_eig(const QuotientMatrix& q) {
    switch (q.dim) {
        case 1:
            return q(0, 0);
        case 2:
            return largest_real_root(characteristic_quadratic(q));
        case 3:
            return largest_real_root(characteristic_cubic(q));
        default: {
            // diag(sqrt(|B_i|)) similarity makes equitable quotients symmetric
            std::vector<double> root(static_cast<std::size_t>(q.dim));
            for (int i = 0; i < q.dim; ++i)
                root[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(popcount(q.blocks.blocks[static_cast<std::size_t>(i)])));
            SymMatrix s(q.dim);
            bool symmetric = true;
            for (int i = 0; i < q.dim && symmetric; ++i)
                for (int j = 0; j < q.dim; ++j) {
                    const double val = q(i, j) * root[static_cast<std::size_t>(i)] / root[static_cast<std::size_t>(j)];
                    s(i, j) = val;
                    if (j < i && std::abs(s(i, j) - s(j, i)) > 1e-9 * std::max(1.0, std::abs(val))) {
                        symmetric = false;
                        break;
                    }
                }
            if (symmetric) return spectral_radius(s);
            return power_iteration(q);
        }
    }
}

}  // namespace specfac
