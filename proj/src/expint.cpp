#include "bergman/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bergman {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
}

double exp_integral_E1(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("exp_integral_E1: x must be > 0");
    if (x <= 1.0) {
        // E1(x) = -gamma - log x + sum (-1)^{n+1} x^n / (n n!)
        double sum = 0.0, term = 1.0;
        for (int n = 1; n <= 60; ++n) {
            term *= -x / n;
            const double add = -term / n;
            sum += add;
            if (std::abs(add) < 1e-19 * (std::abs(sum) + 1.0)) break;
        }
        return -kEulerGamma - std::log(x) + sum;
    }
    // modified Lentz for the continued fraction
    // E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double f = d;
    for (int n = 1; n <= 200; ++n) {
        const double a = -static_cast<double>(n) * n;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        if (c == 0.0) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return f * std::exp(-x);
}

double exp_integral_E1_log(double log_x) {
    if (log_x > -30.0) return exp_integral_E1(std::exp(log_x));
    // x <= 1e-13: all power terms are below double resolution
    return -kEulerGamma - log_x;
}

double exp_integral_expE1_log(double log_x) {
    if (log_x > -30.0) {
        const double x = std::exp(log_x);
        return std::exp(x) * exp_integral_E1(x);
    }
    return -kEulerGamma - log_x;
}

double e1_lower_bound(double x) { return 0.5 * std::exp(-x) * std::log1p(2.0 / x); }

double e1_upper_bound(double x) { return std::exp(-x) * std::log1p(1.0 / x); }

} // namespace bergman
