#pragma once

#include <vector>

#include "specfac/graph.hpp"
#include "specfac/roots.hpp"

namespace specfac {

/// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
    explicit SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    double trace() const;
    double inf_norm() const;   // max absolute row sum
    double frob_norm() const;

private:
    int dim_;
    std::vector<double> a_;
};

/// A_alpha(G) = alpha*D(G) + (1-alpha)*A(G), alpha in [0,1).
SymMatrix a_alpha(const Graph& g, double alpha);

/// All eigenvalues, descending, by cyclic Jacobi rotations (sweeps until
/// the off-diagonal Frobenius norm falls below kTol.jacobi_offdiag_rel
/// times ||m||_F, hard cap kTol.jacobi_max_sweeps).
std::vector<double> eigenvalues(SymMatrix m);
double spectral_radius(const SymMatrix& m);

/// Ordered list of disjoint vertex blocks covering V(G).
struct Partition {
    std::vector<VertexSet> blocks;
};

bool is_equitable(const Graph& g, const Partition& pi);

/// Block-average matrix of A_alpha under a partition; not necessarily
/// symmetric. Keeps the originating blocks for symmetrization.
struct QuotientMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major
    Partition blocks;

    double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double trace() const;
};

QuotientMatrix quotient(const Graph& g, double alpha, const Partition& pi);

/// Largest real eigenvalue of the quotient. dim <= 3 goes through the
/// characteristic polynomial; larger dims are symmetrized by block-size
/// square roots when that similarity is exact, else power iteration.
double quotient_largest_eig(const QuotientMatrix& q);

Cubic characteristic_cubic(const QuotientMatrix& q);          // dim == 3
Quadratic characteristic_quadratic(const QuotientMatrix& q);  // dim == 2

}  // namespace specfac
