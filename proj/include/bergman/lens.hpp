#ifndef BERGMAN_LENS_HPP
#define BERGMAN_LENS_HPP

#include <functional>
#include <vector>

namespace bergman {

// Area of disc(0, r1) intersected with disc(d, r2), d >= 0.
double disc_intersection_area(double d, double r1, double r2);

// B_s(c) = |{z in D : |1 - s z| < c}|, 0 < s <= 1. A lens: the set is
// disc(1/s, c/s) intersected with the unit disc.
double sublevel_area(double c, double s);

// Layer density dB_s/dq: integrals of q-radial functions over the disc
// collapse to 1-D,  int_D F(|1 - s z|) dV(z) = int_{1-s}^{1+s} F(q) L_s(q) dq.
double layer_density(double q, double s);

// Composite nodes for the layer integral; weights include L_s. Panels are
// geometrically refined toward both endpoints (sqrt-type kinks) and split at
// any interior kink the integrand is known to have.
struct LensGrid {
    std::vector<double> q;
    std::vector<double> w;
};

LensGrid lens_grid(double s, const std::vector<double>& interior_kinks = {}, int order = 16,
                   int levels = 40);

double lens_integral(const std::function<double(double)>& F, double s,
                     const std::vector<double>& interior_kinks = {}, int order = 16);

} // namespace bergman

#endif
