#ifndef BERGMAN_PROJECTOR_HPP
#define BERGMAN_PROJECTOR_HPP

#include <map>
#include <string>

#include "bergman/functions.hpp"
#include "bergman/monomials.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

// Truncated Laurent-monomial coefficient table representing a projected
// function on a Reinhardt domain.
struct SpectralCoefficients {
    DomainSpec domain;
    int truncation = 0;
    std::map<std::pair<int, int>, Complex> entries;
    double tail_estimate = 0.0;

    Complex coeff(MonomialIndex idx) const {
        auto it = entries.find({idx.a, idx.b});
        return it == entries.end() ? Complex(0.0) : it->second;
    }
};

// Coefficients of P(f): c_idx = <f, w^idx> / ||w^idx||^2 for all admissible
// idx with total degree <= truncation. Angular integrals are exact by
// discrete orthogonality of the equispaced nodes; only the radial direction
// carries quadrature error. Requires rule.angular_order >= truncation so no
// alias lands on a retained index.
SpectralCoefficients project_series(const DomainSpec& domain, const FunctionHandle& f,
                                    int truncation, const QuadratureRule& rule);

// Sum of the monomial series at an interior point; negative powers of z2 on
// the Hartogs triangle are evaluated directly (z2 != 0 there).
Complex eval_projection(const SpectralCoefficients& coeffs, const CPoint& z);

struct ProjectionResult {
    Complex value;
    double error = 0.0;
    bool converged = true;
};

// P(f)(z) by direct kernel quadrature; the independent cross-check path
// against project_series.
ProjectionResult project_quadrature(const DomainSpec& domain, const FunctionHandle& f,
                                    const CPoint& z, const QuadratureRule& rule,
                                    double tol = 1e-6);

// P+(f)(z) with |kernel| and |f|.
ProjectionResult project_abs(const DomainSpec& domain, const FunctionHandle& f, const CPoint& z,
                             const QuadratureRule& rule, double tol = 1e-6);

std::string to_json(const SpectralCoefficients& coeffs);
SpectralCoefficients coefficients_from_json(const std::string& text);

} // namespace bergman

#endif
