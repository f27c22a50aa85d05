#include "specfac/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specfac {

namespace {

// Newton refinement that never accepts a worse residual than it started
// with; near-multiple roots stall harmlessly.
template <typename Poly>
double polish(const Poly& p, double x) {
    double best = x;
    double best_res = std::abs(p.eval(x));
    for (int it = 0; it < 60; ++it) {
        const double d = p.deriv(x);
        if (d == 0.0) break;
        const double step = p.eval(x) / d;
        x -= step;
        const double res = std::abs(p.eval(x));
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return best;
}

}  // namespace

std::vector<double> real_roots(const Cubic& c) {
    if (c.c3 == 0.0) throw std::invalid_argument("cubic: degenerate leading coefficient");
    const double a = c.c2 / c.c3;
    const double b = c.c1 / c.c3;
    const double d = c.c0 / c.c3;

    const double q = (a * a - 3 * b) / 9.0;
    const double r = (2 * a * a * a - 9 * a * b + 27 * d) / 54.0;
    const double q3 = q * q * q;

    std::vector<double> roots;
    const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(d)});
    if (std::abs(q) <= 1e-14 * scale * scale && std::abs(r) <= 1e-14 * scale * scale * scale) {
        // triple root
        const double x = -a / 3.0;
        roots = {x, x, x};
    } else if (r * r < q3) {
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        roots = {m * std::cos(t / 3.0) - a / 3.0,
                 m * std::cos((t + 2.0 * std::numbers::pi) / 3.0) - a / 3.0,
                 m * std::cos((t - 2.0 * std::numbers::pi) / 3.0) - a / 3.0};
    } else {
        const double u = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q3)), r);
        const double v = (u == 0.0) ? 0.0 : q / u;
        roots.push_back(u + v - a / 3.0);
        // discriminant ~ 0: a real double root at -(u+v)/2 - a/3
        if (std::abs(r * r - q3) <= 1e-12 * std::max(1.0, std::abs(q3))) {
            const double x = -(u + v) / 2.0 - a / 3.0;
            roots.push_back(x);
            roots.push_back(x);
        }
    }
    for (double& x : roots) x = polish(c, x);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> real_roots(const Quadratic& q) {
    if (q.c2 == 0.0) throw std::invalid_argument("quadratic: degenerate leading coefficient");
    const double disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
    if (disc < 0) return {};
    std::vector<double> roots;
    if (disc == 0) {
        const double x = -q.c1 / (2 * q.c2);
        roots = {x, x};
    } else {
        const double s = std::sqrt(disc);
        const double t = -(q.c1 + std::copysign(s, q.c1)) / 2.0;
        const double r0 = t / q.c2;
        const double r1 = (t != 0.0) ? q.c0 / t : -q.c1 / (2 * q.c2);
        roots = {r0, r1};
    }
    for (double& x : roots) x = polish(q, x);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

double largest_real_root(const Cubic& c) { return real_roots(c).front(); }

double largest_real_root(const Quadratic& q) {
    const auto r = real_roots(q);
    if (r.empty()) throw std::domain_error("quadratic has no real roots");
    return r.front();
}

}  // namespace specfac
