// Test-only reference oracles, independent of the library quadrature:
// adaptive Simpson in 1-D, plus small closed-form helpers. These freeze the
// expected values the main implementation is checked against.
#ifndef TESTS_ORACLE_UTILS_HPP
#define TESTS_ORACLE_UTILS_HPP

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, a, c);
    const double right = simpson(f, c, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, c, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, c, b, right, tol / 2.0, depth - 1);
}

// brute-force adaptive quadrature; f must be finite on (a,b)
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int depth = 48) {
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, depth);
}

// integral over (a,b] with an integrable endpoint singularity at a: dyadic
// panels toward a
inline double integrate_singular_left(const std::function<double(double)>& f, double a, double b,
                                      double tip = 1e-14, double tol = 1e-12) {
    double total = 0.0;
    double hi = b;
    double width = (b - a) / 2.0;
    while (width > tip * (b - a)) {
        const double lo = a + width;
        total += integrate(f, lo, hi, tol);
        hi = lo;
        width /= 2.0;
    }
    return total;
}

// E1(x) = int_x^inf e^-t / t dt by brute force on a truncated range
inline double e1_bruteforce(double x) {
    const double cutoff = std::max(x, 1.0) + 745.0;
    return integrate([](double t) { return std::exp(-t) / t; }, x, cutoff, 1e-15);
}

} // namespace oracle

#endif
