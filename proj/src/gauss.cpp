#include "bergman/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

Nodes1D gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Nodes1D out;
    out.x.resize(n);
    out.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        out.x[i] = -x;
        out.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.w[i] = w;
        out.w[n - 1 - i] = w;
    }
    return out;
}

Nodes1D gauss_legendre(int n, double a, double b) {
    Nodes1D base = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.size(); ++i) {
        base.x[i] = mid + half * base.x[i];
        base.w[i] *= half;
    }
    return base;
}

Nodes1D composite_gauss(int n_per_panel, const std::vector<double>& breaks) {
    if (breaks.size() < 2) throw std::invalid_argument("composite_gauss: need >= 2 breakpoints");
    Nodes1D out;
    Nodes1D base = gauss_legendre(n_per_panel);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double a = breaks[k], b = breaks[k + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < base.size(); ++i) {
            out.x.push_back(mid + half * base.x[i]);
            out.w.push_back(half * base.w[i]);
        }
    }
    return out;
}

std::vector<double> panels_refined_right(double tip, int base_splits) {
    if (!(tip > 0.0 && tip < 0.5)) tip = 0.25;
    std::vector<double> rev;
    rev.push_back(1.0);
    double h = tip;
    double pos = 1.0 - h;
    while (pos > 1.0 / (1 << base_splits)) {
        rev.push_back(pos);
        h *= 2.0;
        pos = rev.back() - h;
    }
    // uniform-ish splits of the remaining left part
    double left = rev.back();
    for (int k = 1; k < base_splits; ++k) rev.push_back(left * (base_splits - k) / base_splits);
    rev.push_back(0.0);
    return {rev.rbegin(), rev.rend()};
}

std::vector<double> panels_refined_left(double a, double b, double tip) {
    std::vector<double> out;
    out.push_back(a);
    double h = tip;
    double pos = a + h;
    while (pos < b - h) {
        out.push_back(pos);
        h *= 2.0;
        pos = out.back() + h;
    }
    out.push_back(b);
    return out;
}

} // namespace bergman
