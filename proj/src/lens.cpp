#include "bergman/lens.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/gauss.hpp"
#include "bergman/summation.hpp"

namespace bergman {

double disc_intersection_area(double d, double r1, double r2) {
    if (r1 <= 0.0 || r2 <= 0.0) return 0.0;
    if (d >= r1 + r2) return 0.0;
    if (d <= std::abs(r1 - r2)) {
        const double r = std::min(r1, r2);
        return M_PI * r * r;
    }
    auto clamp1 = [](double x) { return std::min(1.0, std::max(-1.0, x)); };
    const double a1 = clamp1((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
    const double a2 = clamp1((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
    const double tri =
        0.5 * std::sqrt(std::max(0.0, (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)));
    return r1 * r1 * std::acos(a1) + r2 * r2 * std::acos(a2) - tri;
}

double sublevel_area(double c, double s) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("sublevel_area: need 0 < s <= 1");
    if (c <= 1.0 - s) return 0.0;
    if (c >= 1.0 + s) return M_PI;
    return disc_intersection_area(1.0 / s, 1.0, c / s);
}

double layer_density(double q, double s) {
    if (q <= 1.0 - s || q >= 1.0 + s) return 0.0;
    double arg = (1.0 + q * q - s * s) / (2.0 * q);
    arg = std::min(1.0, std::max(-1.0, arg));
    return 2.0 * q / (s * s) * std::acos(arg);
}

LensGrid lens_grid(double s, const std::vector<double>& interior_kinks, int order, int levels) {
    const double lo = 1.0 - s, hi = 1.0 + s;
    std::vector<double> breaks{lo, hi};
    // geometric refinement toward both sqrt endpoints
    double h = (hi - lo) / 4.0;
    for (int k = 0; k < levels; ++k) {
        h *= 0.5;
        breaks.push_back(lo + h);
        breaks.push_back(hi - h);
    }
    for (double q : interior_kinks)
        if (q > lo && q < hi) breaks.push_back(q);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    Nodes1D nodes = composite_gauss(order, breaks);
    LensGrid g;
    g.q = nodes.x;
    g.w.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) g.w[i] = nodes.w[i] * layer_density(nodes.x[i], s);
    return g;
}

double lens_integral(const std::function<double(double)>& F, double s,
                     const std::vector<double>& interior_kinks, int order) {
    LensGrid g = lens_grid(s, interior_kinks, order);
    return map_sum(g.q.size(), [&](std::size_t i) { return g.w[i] * F(g.q[i]); });
}

} // namespace bergman
