#ifndef BERGMAN_QUADRATURE_HPP
#define BERGMAN_QUADRATURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bergman/domain.hpp"

namespace bergman {

// Polar tensor grid for one complex coordinate: radial nodes on (0,1) with
// weights that already include the r dr (or r^3 dr for the Hartogs second
// coordinate) measure factor, and equispaced angles.
struct PolarGrid {
    std::vector<double> r;
    std::vector<double> wr;
    std::vector<double> theta;
    double wtheta = 0.0;
    std::size_t nodes() const { return r.size() * theta.size(); }
};

// Tensor quadrature rule in polar coordinates per complex coordinate. For the
// Hartogs triangle the grid lives on D^2 in the coordinates (u,v) = (z1/z2,
// z2) with the |z2|^2 Jacobian folded into the v radial weights, so no node
// has z2 = 0.
struct QuadratureRule {
    DomainSpec domain;
    int radial_order = 0;
    int angular_order = 0;
    std::vector<PolarGrid> grids;

    std::size_t node_count() const;
    // Node and weight by flat index, fixed ordering.
    void node(std::size_t idx, CPoint& z, double& w) const;
    double weight_sum() const;
};

struct IntegrationResult {
    Complex value;
    double error = 0.0;      // |full - half-order| estimate
    bool converged = true;
};

// Build a rule. `singular_s`, when present and >= 0.9, activates geometric
// radial refinement toward r = 1 for |1 - s z|^{-beta}-type integrands.
QuadratureRule quadrature_rule(const DomainSpec& domain, int radial_order, int angular_order,
                               std::optional<double> singular_s = std::nullopt);

// Weighted node sum with a fixed reduction order (schedule independent).
// Throws std::runtime_error naming the node if the integrand is not finite.
Complex integrate_value(const std::function<Complex(const CPoint&)>& f, const QuadratureRule& rule);
Complex integrate_value_serial(const std::function<Complex(const CPoint&)>& f, const QuadratureRule& rule);

// Same sum plus an error estimate from a half-order companion rule.
IntegrationResult integrate(const std::function<Complex(const CPoint&)>& f, const QuadratureRule& rule);

// 1-D radial integrals int_0^1 g(r) r^k dr. `log_substitution` evaluates in
// t = -log r with geometric panels out to t_max: this is the only way to
// resolve r^{delta-1} mass for delta near 0 or (log r)-type weights.
double radial_integral(const std::function<double(double)>& g, int k_measure, int order);
double radial_integral_log(const std::function<double(double)>& g_of_t, int k_measure, double t_max,
                           int order);

} // namespace bergman

#endif
