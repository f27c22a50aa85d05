#pragma once

namespace specfac {

/// Central numeric tolerances. Defaults are the contract; nothing else
/// in the library hard-codes a threshold.
struct Tolerances {
    double jacobi_offdiag_rel = 1e-12;  // off-diagonal Frobenius vs ||m||_F
    int jacobi_max_sweeps = 100;
    double power_rel = 1e-12;
    long power_max_iters = 100000;
    double root_residual_rel = 1e-9;    // |p(root)| vs max(1,|c0|,|c1|,|c2|)
    double quotient_match = 1e-8;       // quotient eig vs full spectrum
    double threshold_tie = 1e-7;        // dead zone around rho == eta
    double audit_strict = 1e-9;         // strict sign claims need this margin
};

inline constexpr Tolerances kTol{};

}  // namespace specfac
