#pragma once

#include <string>
#include <variant>
#include <vector>

#include "specfac/roots.hpp"

namespace specfac {

/// Minimum order for which the spectral threshold theorems apply:
/// 14 on [0,1/2], 17 on (1/2,2/3], 20 on (2/3,3/4], 5/(1-alpha)+1 above.
double f_alpha(double alpha);
bool threshold_in_domain(int n, double alpha);

/// Threshold cubics. eta(n) bounds the covered property, theta(n) the
/// factor-existence property; both are largest roots of an explicit
/// cubic in n and alpha. Values are computed even below f(alpha) —
/// callers flag out-of-domain use via threshold_in_domain.
Cubic eta_cubic(int n, double alpha);
Cubic theta_cubic(int n, double alpha);
double eta(int n, double alpha);
double theta(int n, double alpha);

/// Quotient-matrix cases for the named graph families:
///   B0: K_1 v (K_{n-4} u 3K_1)                    (3x3)
///   B1: K_s v (K_{n-3s} u 2sK_1),   n >= 3s+2     (3x3)
///   B2: K_s v (K_{n-3s+1} u (2s-1)K_1), n >= 3s+1 (3x3)
///   B3: K_s v (2s-1)K_1,            n == 3s-1     (2x2)
///   B4: K_s v 2sK_1,                n == 3s       (2x2)
enum class CaseId { B0, B1, B2, B3, B4 };

using CharPoly = std::variant<Cubic, Quadratic>;

/// Closed-form characteristic polynomial of the case quotient matrix,
/// coefficients substituted directly. Must match the numerically
/// assembled quotient coefficientwise (tested).
CharPoly case_char_poly(CaseId id, int n, int s, double alpha);

double largest_real_root(const CharPoly& p);

enum class SignAssertion { Positive, Negative, NonNegative, ApproxZero };

struct AuditReport {
    std::string claim;
    int n = 0;
    int s = 0;  // 0 when not applicable
    double alpha = 0;
    double value = 0;
    SignAssertion sign = SignAssertion::Positive;
    bool pass = false;
};

AuditReport make_audit(std::string claim, int n, int s, double alpha, double value, SignAssertion sign);
const char* sign_name(SignAssertion s);

/// Evaluates every sign claim of the threshold analysis at one (n, alpha)
/// with n >= f(alpha): positivity of the case gap lower bounds, the
/// case values and derivatives at x = n-3, the eta/theta separation, and
/// the algebraic identities tying the expanded forms to the case
/// polynomials. Failures are data, not errors.
std::vector<AuditReport> audit_inequalities(int n, double alpha);

/// Middle root of the B1/B2 case cubic stays below n-3 (B1) resp. n-4
/// (B2); this is what lets the largest root comparisons propagate.
AuditReport second_eig_bound(CaseId id, int n, int s, double alpha);

}  // namespace specfac
