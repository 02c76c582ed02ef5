#include "bergman/functions.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/sampling.hpp"

namespace bergman {

FunctionHandle constant_function(const DomainSpec& domain, Complex c) {
    FunctionHandle f;
    f.domain = domain;
    f.eval = [c](const CPoint&) { return c; };
    f.label = "const";
    std::vector<int> m0(static_cast<std::size_t>(domain.dimension), 0);
    f.polar_data = std::vector<PolarMode>{{m0, [c](const std::vector<double>&) { return c; }}};
    f.radial_modulus = FunctionHandle::RadialModulus{0, [c](double) { return std::abs(c); }};
    if (domain.dimension == 2)
        f.uv_factors = {{[c](Complex) { return c; }, [](Complex) { return Complex(1.0, 0.0); }}};
    return f;
}

FunctionHandle monomial_function(const DomainSpec& domain, int a, int b) {
    FunctionHandle f;
    f.domain = domain;
    if (domain.dimension == 1) {
        f.eval = [a](const CPoint& z) { return std::pow(z[0], a); };
        f.polar_data = std::vector<PolarMode>{
            {{a}, [a](const std::vector<double>& r) { return Complex(std::pow(r[0], a), 0.0); }}};
        f.label = "z^" + std::to_string(a);
    } else {
        f.eval = [a, b](const CPoint& z) { return std::pow(z[0], a) * std::pow(z[1], b); };
        f.polar_data = std::vector<PolarMode>{
            {{a, b}, [a, b](const std::vector<double>& r) {
                 return Complex(std::pow(r[0], a) * std::pow(r[1], b), 0.0);
             }}};
        f.label = "z1^" + std::to_string(a) + " z2^" + std::to_string(b);
    }
    return f;
}

double polar_reconstruction_error(const FunctionHandle& f, int n_points, std::uint64_t seed) {
    if (!f.polar_data) return 0.0;
    SampleCloud cloud = sample(f.domain, static_cast<std::size_t>(n_points), seed);
    double worst = 0.0;
    for (const auto& z : cloud.points) {
        std::vector<double> r(static_cast<std::size_t>(z.dim()));
        std::vector<double> th(static_cast<std::size_t>(z.dim()));
        for (int c = 0; c < z.dim(); ++c) {
            r[static_cast<std::size_t>(c)] = std::abs(z[c]);
            th[static_cast<std::size_t>(c)] = std::arg(z[c]);
        }
        Complex rec = 0.0;
        for (const auto& mode : *f.polar_data) {
            double phase = 0.0;
            for (int c = 0; c < z.dim(); ++c)
                phase += mode.m[static_cast<std::size_t>(c)] * th[static_cast<std::size_t>(c)];
            rec += mode.rho(r) * std::polar(1.0, phase);
        }
        Complex direct = f.eval(z);
        double scale = std::max(1.0, std::abs(direct));
        worst = std::max(worst, std::abs(rec - direct) / scale);
    }
    return worst;
}

} // namespace bergman
