#include "specfac/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "specfac/tolerances.hpp"

namespace specfac {

double f_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
    if (alpha <= 0.5) return 14.0;
    if (alpha <= 2.0 / 3.0) return 17.0;
    if (alpha <= 0.75) return 20.0;
    return 5.0 / (1.0 - alpha) + 1.0;
}

// The 1e-9 slack absorbs rounding in 5/(1-alpha)+1 at representable
// boundaries like alpha = 0.8, where f is exactly 26.
bool threshold_in_domain(int n, double alpha) { return static_cast<double>(n) + 1e-9 >= f_alpha(alpha); }

Cubic eta_cubic(int n, double alpha) {
    const double a = alpha, N = n;
    return Cubic{1.0,
                 -((a + 1) * N + a - 4),
                 a * N * N + (a * a - 2 * a - 1) * N - 2 * a + 1,
                 -a * a * N * N + (5 * a * a - 3 * a + 2) * N - 10 * a * a + 15 * a - 8};
}

Cubic theta_cubic(int n, double alpha) {
    const double a = alpha, N = n;
    return Cubic{1.0,
                 -((a + 1) * N + a - 5),
                 a * N * N + (a * a - 3 * a - 1) * N - 2 * a + 1,
                 -a * a * N * N + (7 * a * a - 5 * a + 3) * N - 18 * a * a + 29 * a - 15};
}

double eta(int n, double alpha) { return largest_real_root(eta_cubic(n, alpha)); }
double theta(int n, double alpha) { return largest_real_root(theta_cubic(n, alpha)); }

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Cubic b1_cubic(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return Cubic{
        1.0,
        -((a + 1) * N + (a - 2) * S - 2),
        a * N * N + (a * a - a) * S * N - (a + 1) * N - 2 * S * S - (2 * a - 2) * S + 1,
        -a * a * S * N * N + (4 * a * a - 4 * a + 2) * S * S * N + (a * a + a) * S * N -
            (8 * a * a - 14 * a + 6) * S * S * S - (2 * a * a - 2 * a + 2) * S * S - a * S};
}

Cubic b2_cubic(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return Cubic{
        1.0,
        -((a + 1) * N + (a - 2) * S - 1),
        a * N * N + (a * a - a) * S * N - N - 2 * S * S - (2 * a - 3) * S,
        -a * a * S * N * N + (4 * a * a - 4 * a + 2) * S * S * N - (a * a - 3 * a + 1) * S * N -
            (8 * a * a - 14 * a + 6) * S * S * S + (4 * a * a - 9 * a + 3) * S * S};
}

Quadratic b3_quadratic(int s, double alpha) {
    const double a = alpha, S = s;
    return Quadratic{1.0, -(3 * a * S + S - a - 1), 5 * a * S * S - 2 * S * S - 3 * a * S + S};
}

Quadratic b4_quadratic(int s, double alpha) {
    const double a = alpha, S = s;
    return Quadratic{1.0, -(3 * a * S + S - 1), 5 * a * S * S - 2 * S * S - a * S};
}

// Gap between the B1 cubic and the eta cubic at x, divided by (s-1):
// a quadratic in x whose positivity at eta drives the B1 comparison.
double b1_gap_quadratic(double x, int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return (2 - a) * x * x - ((a - a * a) * N + 2 * S + 2 * a) * x - a * a * N * N +
           (4 * a * a - 4 * a + 2) * S * N + (5 * a * a - 3 * a + 2) * N -
           (8 * a * a - 14 * a + 6) * S * S - (10 * a * a - 16 * a + 8) * S - 10 * a * a + 15 * a - 8;
}

// b1_gap_quadratic evaluated at x = n-3, fully expanded in (n, s).
double b1_gap_floor(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return (2 - 2 * a) * N * N + ((4 * a * a - 4 * a) * S + 2 * a * a + 4 * a - 10) * N -
           (8 * a * a - 14 * a + 6) * S * S - (10 * a * a - 16 * a + 2) * S - 10 * a * a + 12 * a + 10;
}

// Difference of the B2 cubic and the eta cubic evaluated at x = n-3,
// fully expanded in (n, s); nonnegative on the admissible range.
double b2_gap_floor(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return ((2 - 2 * a) * S + 3 * a - 3) * N * N +
           ((4 * a * a - 4 * a) * S * S - (4 * a * a - 10 * a + 10) * S - 2 * a * a - 7 * a + 15) * N -
           (8 * a * a - 14 * a + 6) * S * S * S + (4 * a * a - 9 * a + 9) * S * S - 3 * (a - 3) * S +
           10 * a * a - 12 * a - 16;
}

// B1 cubic evaluated at x = n-3, expanded as a cubic in s.
double b1_value_at_n_minus_3(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return 2 * (1 - a) * (4 * a - 3) * S * S * S +
           ((4 * a * a - 4 * a) * N - 2 * a * a + 2 * a + 4) * S * S +
           ((2 - 2 * a) * N * N - (2 * a * a - 8 * a + 10) * N - 4 * a + 12) * S +
           (2 * a - 2) * N * N - (6 * a - 10) * N - 12;
}

// B2 cubic evaluated at x = n-3, expanded as a cubic in s.
double b2_value_at_n_minus_3(int n, int s, double alpha) {
    const double a = alpha, N = n, S = s;
    return 2 * (1 - a) * (4 * a - 3) * S * S * S +
           ((4 * a * a - 4 * a) * N + 4 * a * a - 9 * a + 9) * S * S +
           ((2 - 2 * a) * N * N - (4 * a * a - 10 * a + 10) * N - 3 * a + 9) * S +
           (3 * a - 3) * N * N - (9 * a - 15) * N - 18;
}

bool sign_holds(double value, SignAssertion s) {
    switch (s) {
        case SignAssertion::Positive: return value > kTol.audit_strict;
        case SignAssertion::Negative: return value < -kTol.audit_strict;
        case SignAssertion::NonNegative: return value >= -kTol.audit_strict;
        case SignAssertion::ApproxZero: return std::abs(value) <= 1e-6;
    }
    return false;
}

}  // namespace

CharPoly case_char_poly(CaseId id, int n, int s, double alpha) {
    switch (id) {
        case CaseId::B0:
            require(n >= 5, "B0 requires n >= 5");
            return theta_cubic(n, alpha);
        case CaseId::B1:
            require(s >= 1 && n >= 3 * s + 2, "B1 requires s >= 1 and n >= 3s+2");
            return b1_cubic(n, s, alpha);
        case CaseId::B2:
            require(s >= 2 && n >= 3 * s + 1, "B2 requires s >= 2 and n >= 3s+1");
            return b2_cubic(n, s, alpha);
        case CaseId::B3:
            require(s >= 2 && n == 3 * s - 1, "B3 requires s >= 2 and n == 3s-1");
            return b3_quadratic(s, alpha);
        case CaseId::B4:
            require(s >= 2 && n == 3 * s, "B4 requires s >= 2 and n == 3s");
            return b4_quadratic(s, alpha);
    }
    throw std::invalid_argument("unknown case id");
}

double largest_real_root(const CharPoly& p) {
    return std::visit([](const auto& poly) { return largest_real_root(poly); }, p);
}

AuditReport make_audit(std::string claim, int n, int s, double alpha, double value, SignAssertion sign) {
    AuditReport r;
    r.claim = std::move(claim);
    r.n = n;
    r.s = s;
    r.alpha = alpha;
    r.value = value;
    r.sign = sign;
    r.pass = sign_holds(value, sign);
    return r;
}

const char* sign_name(SignAssertion s) {
    switch (s) {
        case SignAssertion::Positive: return "> 0";
        case SignAssertion::Negative: return "< 0";
        case SignAssertion::NonNegative: return ">= 0";
        case SignAssertion::ApproxZero: return "~= 0";
    }
    return "?";
}

std::vector<AuditReport> audit_inequalities(int n, double alpha) {
    std::vector<AuditReport> out;
    const double th = theta(n, alpha);
    const double et = eta(n, alpha);

    out.push_back(make_audit("theta_exceeds_n_minus_4", n, 0, alpha, th - (n - 4), SignAssertion::Positive));
    out.push_back(make_audit("eta_exceeds_n_minus_3", n, 0, alpha, et - (n - 3), SignAssertion::Positive));
    out.push_back(make_audit("eta_cubic_at_theta_negative", n, 0, alpha, eta_cubic(n, alpha).eval(th),
                             SignAssertion::Negative));
    out.push_back(make_audit("theta_below_eta", n, 0, alpha, et - th, SignAssertion::Positive));

    // B1 family: 2 <= s <= (n-2)/3
    for (int s = 2; 3 * s <= n - 2; ++s) {
        const Cubic c1 = b1_cubic(n, s, alpha);
        out.push_back(make_audit("case_b1_gap_factorization", n, s, alpha,
                                 c1.eval(et) - (s - 1) * b1_gap_quadratic(et, n, s, alpha),
                                 SignAssertion::ApproxZero));
        out.push_back(make_audit("case_b1_value_at_n_minus_3_identity", n, s, alpha,
                                 c1.eval(n - 3.0) - b1_value_at_n_minus_3(n, s, alpha),
                                 SignAssertion::ApproxZero));
        if (alpha <= 0.75) {
            out.push_back(make_audit("case_b1_gap_above_floor", n, s, alpha,
                                     b1_gap_quadratic(et, n, s, alpha) - b1_gap_floor(n, s, alpha),
                                     SignAssertion::Positive));
            out.push_back(make_audit("case_b1_gap_floor_positive", n, s, alpha, b1_gap_floor(n, s, alpha),
                                     SignAssertion::Positive));
            out.push_back(make_audit("case_b1_cubic_at_eta_positive", n, s, alpha, c1.eval(et),
                                     SignAssertion::Positive));
        } else {
            out.push_back(make_audit("case_b1_value_at_n_minus_3_positive", n, s, alpha,
                                     b1_value_at_n_minus_3(n, s, alpha), SignAssertion::Positive));
        }
    }

    // B2 family: 2 <= s <= (n-1)/3
    for (int s = 2; 3 * s <= n - 1; ++s) {
        const Cubic c2 = b2_cubic(n, s, alpha);
        out.push_back(make_audit("case_b2_value_at_n_minus_3_identity", n, s, alpha,
                                 c2.eval(n - 3.0) - b2_value_at_n_minus_3(n, s, alpha),
                                 SignAssertion::ApproxZero));
        if (alpha <= 0.75) {
            out.push_back(make_audit("case_b2_gap_floor_nonnegative", n, s, alpha, b2_gap_floor(n, s, alpha),
                                     SignAssertion::NonNegative));
            out.push_back(make_audit("case_b2_cubic_at_eta_above_floor", n, s, alpha,
                                     c2.eval(et) - b2_gap_floor(n, s, alpha), SignAssertion::Positive));
            out.push_back(make_audit("case_b2_cubic_at_eta_positive", n, s, alpha, c2.eval(et),
                                     SignAssertion::Positive));
        } else {
            out.push_back(make_audit("case_b2_value_at_n_minus_3_positive", n, s, alpha,
                                     b2_value_at_n_minus_3(n, s, alpha), SignAssertion::Positive));
        }
    }

    // B3: n == 3s-1
    if ((n + 1) % 3 == 0) {
        const int s = (n + 1) / 3;
        if (s >= 5) {
            const Quadratic q3 = b3_quadratic(s, alpha);
            const double a = alpha, S = s;
            const double printed = (4 - 4 * a) * S * S + (12 * a - 16) * S - 4 * a + 12;
            out.push_back(make_audit("case_b3_value_at_n_minus_3_identity", n, s, alpha,
                                     q3.eval(n - 3.0) - printed, SignAssertion::ApproxZero));
            out.push_back(make_audit("case_b3_value_at_n_minus_3_positive", n, s, alpha, q3.eval(n - 3.0),
                                     SignAssertion::Positive));
            out.push_back(make_audit("case_b3_derivative_at_n_minus_3_positive", n, s, alpha,
                                     q3.deriv(n - 3.0), SignAssertion::Positive));
        }
    }

    // B4: n == 3s
    if (n % 3 == 0) {
        const int s = n / 3;
        if (s >= 5) {
            const Quadratic q4 = b4_quadratic(s, alpha);
            const double a = alpha, S = s;
            const double printed = (4 - 4 * a) * S * S + (8 * a - 12) * S + 6;
            out.push_back(make_audit("case_b4_value_at_n_minus_3_identity", n, s, alpha,
                                     q4.eval(n - 3.0) - printed, SignAssertion::ApproxZero));
            out.push_back(make_audit("case_b4_value_at_n_minus_3_positive", n, s, alpha, q4.eval(n - 3.0),
                                     SignAssertion::Positive));
            out.push_back(make_audit("case_b4_derivative_at_n_minus_3_positive", n, s, alpha,
                                     q4.deriv(n - 3.0), SignAssertion::Positive));
        }
    }

    return out;
}

AuditReport second_eig_bound(CaseId id, int n, int s, double alpha) {
    if (id != CaseId::B1 && id != CaseId::B2)
        throw std::invalid_argument("second_eig_bound supports B1 and B2 only");
    const CharPoly p = case_char_poly(id, n, s, alpha);
    const auto roots = real_roots(std::get<Cubic>(p));
    if (roots.size() != 3) throw std::runtime_error("case cubic unexpectedly lacks three real roots");
    const double middle = roots[1];
    const double bound = (id == CaseId::B1) ? (n - 3.0) : (n - 4.0);
    const char* claim = (id == CaseId::B1) ? "case_b1_second_root_below_n_minus_3"
                                           : "case_b2_second_root_below_n_minus_4";
    return make_audit(claim, n, s, alpha, bound - middle, SignAssertion::Positive);
}

}  // namespace specfac
