#ifndef BERGMAN_FUNCTIONS_HPP
#define BERGMAN_FUNCTIONS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergman/domain.hpp"

namespace bergman {

// One angular mode of a polar-separable function:
// contributes rho(r1[,r2]) * exp(i m . theta).
struct PolarMode {
    std::vector<int> m;
    std::function<Complex(const std::vector<double>&)> rho;
};

// Evaluable function on a domain, with optional structure metadata that the
// projector and the norm machinery exploit. Only `eval` is required; every
// fast path falls back to it.
struct FunctionHandle {
    DomainSpec domain;
    std::function<Complex(const CPoint&)> eval;
    std::string label;

    // finite list of angular modes (when the function has one)
    std::optional<std::vector<PolarMode>> polar_data;

    // parameter s of a |1 - s z|^{-beta}-type near-boundary singularity,
    // picked up by adaptive quadrature
    std::optional<double> singular_s;

    // f = f1(c1) * f2(c2) in projection coordinates (z on discs, (u,v) =
    // (z1/z2, z2) on the Hartogs triangle)
    std::optional<std::array<std::function<Complex(Complex)>, 2>> uv_factors;

    // |f(z)| = F(|1 - s z1|, |1 - s z2|) on the bidisc (the f_s family and
    // its projection); norms and distributions reduce to 1-D/2-D integrals
    // over the lens layers of |1 - s z| = q
    struct QProfile {
        double s;
        std::function<double(double, double)> F;
    };
    std::optional<QProfile> q_profile;

    // |f(z)| = g(|z_coord|). For moduli with power/log blowup at r = 0 the
    // optional log form log|f| at r = e^{-t} keeps the deep radial tail
    // representable (r itself underflows long before the mass is exhausted).
    struct RadialModulus {
        int coord;
        std::function<double(double)> g;
        std::function<double(double)> log_g_of_t;
    };
    std::optional<RadialModulus> radial_modulus;

    Complex operator()(const CPoint& z) const { return eval(z); }
};

FunctionHandle constant_function(const DomainSpec& domain, Complex c);

// Monomial z^a (1-D) or z1^a z2^b; on the Hartogs triangle b may be negative.
FunctionHandle monomial_function(const DomainSpec& domain, int a, int b = 0);

// Checks the polar_data reconstruction against direct evaluation at a few
// deterministic sample points; used by constructors and tests.
double polar_reconstruction_error(const FunctionHandle& f, int n_points = 16,
                                  std::uint64_t seed = 7);

} // namespace bergman

#endif
