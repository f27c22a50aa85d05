#pragma once

#include <vector>

namespace specfac {

/// c3*x^3 + c2*x^2 + c1*x + c0, c3 != 0 for root extraction.
struct Cubic {
    double c3 = 1, c2 = 0, c1 = 0, c0 = 0;

    double eval(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return (3 * c3 * x + 2 * c2) * x + c1; }
};

struct Quadratic {
    double c2 = 1, c1 = 0, c0 = 0;

    double eval(double x) const { return (c2 * x + c1) * x + c0; }
    double deriv(double x) const { return 2 * c2 * x + c1; }
};

/// Real roots with multiplicity, sorted descending. A cubic yields 1 or
/// 3 entries, a quadratic 0 or 2. Discriminant classification
/// (trigonometric branch for three real roots), then Newton polish.
std::vector<double> real_roots(const Cubic& c);
std::vector<double> real_roots(const Quadratic& q);

double largest_real_root(const Cubic& c);
double largest_real_root(const Quadratic& q);

}  // namespace specfac
