#ifndef BERGMAN_WEIGHTS_HPP
#define BERGMAN_WEIGHTS_HPP

#include <vector>

#include "bergman/norms.hpp"

namespace bergman {

// Carleson tent over z in D: T_z = { w : |1 - conj(w) z/|z|| < 1 - |z| },
// with T_0 = D.
struct TentSpec {
    Complex center;
};

bool tent_contains(const TentSpec& tent, Complex w);

// Tent area |T_z| (masked quadrature for z != 0).
double tent_area(const TentSpec& tent, int base_cells = 96, int depth = 3);

struct TentIntegralSeries {
    std::vector<double> estimates; // one per refinement level
    bool divergent = false;
};

// int_{T_z} g dV at increasing refinement levels. For the origin tent the
// levels push the radial cutoff to r_min = 10^{-4 * 10^level}, which is what
// separates a log-divergent mass from a convergent one at desk scale.
TentIntegralSeries tent_integral_series(const TentSpec& tent,
                                        const std::function<double(const CPoint&)>& g,
                                        const std::optional<FunctionHandle::RadialModulus>& radial,
                                        int levels = 4);

struct BBResult {
    double value = 0.0;
    Complex argmax_center;
    bool divergent = false;
    Complex divergent_center;
    double last_change = 0.0; // relative change of value at the final refinement
};

// Bekolle-Bonami constant over the given centers:
//   sup_z <mu>_{T_z} * <mu^{-1/(p-1)}>_{T_z}^{p-1}.
// Returns the flagged sentinel when a tent integral keeps growing >= 3x per
// refinement (three times in a row).
BBResult bb_constant(const WeightSpec& mu, double p, const std::vector<Complex>& centers);

std::vector<Complex> default_center_grid();

// Iterated-logarithm weight family on the disc:
//   h_1 = -log|z| + 1,  h_{j+1} = log(h_j + 1) + 1,
//   f_{alpha,j}(z) = |z|^{-2} h_j^alpha prod_{k<j} h_k^{-1}.
struct IteratedLogWeight {
    int j = 1;
    double alpha = -2.0;
};

// Validates alpha < -1 and checks integrability numerically for the
// requested j.
IteratedLogWeight make_iterated_log_weight(int j, double alpha);

double iterated_log_eval(const IteratedLogWeight& w, Complex z);

// h_j at t = -log|z| (the natural variable for the radial integrals).
double iterated_h(int j, double t);

// int_D f_{alpha,j} dV, truncated at t_max with the analytic tail attached.
double iterated_log_integral(const IteratedLogWeight& w, double t_max = 1e8);

// bb_constant for the weight f_{alpha,j}^{-1/3} at p = 4/3.
BBResult bb_constant_iterated(int j, double alpha, const std::vector<Complex>& centers);

} // namespace bergman

#endif
