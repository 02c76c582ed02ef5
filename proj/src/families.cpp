#include "bergman/families.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/expint.hpp"
#include "bergman/gauss.hpp"
#include "bergman/lens.hpp"
#include "bergman/summation.hpp"

namespace bergman {

double lambda_from_s(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("lambda_from_s: need 0 < s < 1");
    return 1.0 / (16.0 * (1.0 - s) * (1.0 - s));
}

double p_from_lambda_power(double lambda) { return 4.0 / 3.0 + std::pow(lambda, -0.9); }

double log_3pm4_from_lambda_exp(double lambda) {
    return std::log(3.0) - std::pow(lambda, 0.9);
}

DomainSpec CounterexampleFamily::domain() const {
    return kind == FamilyKind::FsBidisc ? DomainSpec::polydisc(2) : DomainSpec::hartogs();
}

namespace {

void require_p(double p) {
    if (!(p > 4.0 / 3.0))
        throw std::invalid_argument("Hartogs counterexample family: need p > 4/3");
}

// p - 1 from the exact log(3p-4); exp underflow rounds to 1/3, which is the
// correct double value there.
double p_minus_1(const CounterexampleFamily& fam) {
    return 1.0 / 3.0 + std::exp(fam.log_3pm4) / 3.0;
}

// p' - 1 = 1/(p-1)
double pprime_minus_1(const CounterexampleFamily& fam) { return 1.0 / p_minus_1(fam); }

// delta = 4 + (4/3)(1 - p') = 4(3p-4)/(3(p-1)): the radial exponent of
// |f_p|^{4/3}; log form stays valid when 3p-4 underflows.
double log_delta_norm(const CounterexampleFamily& fam) {
    return std::log(4.0 / 3.0) + fam.log_3pm4 - std::log(p_minus_1(fam));
}

// delta_c = 4 - p' = (3p-4)/(p-1): the radial exponent behind the projection
// constant.
double log_delta_c(const CounterexampleFamily& fam) {
    return fam.log_3pm4 - std::log(p_minus_1(fam));
}

// int_0^1 r^{delta - 1} g(r) dr with panels reaching t ~ 60/delta in
// t = -log r; g supplied in t form.
double radial_delta_integral(double delta, const std::function<double(double)>& g_of_t) {
    const double t_max = std::min(80.0 / delta, 1e12);
    std::vector<double> breaks{0.0};
    double h = 1.0 / 16.0;
    while (breaks.back() < t_max) {
        breaks.push_back(std::min(breaks.back() + h, t_max));
        h *= 1.6;
    }
    Nodes1D nodes = composite_gauss(12, breaks);
    return map_sum(nodes.size(), [&](std::size_t i) {
        return nodes.w[i] * std::exp(-delta * nodes.x[i]) * g_of_t(nodes.x[i]);
    });
}

} // namespace

CounterexampleFamily fs_family(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("fs_family: need 0 < s < 1");
    return {FamilyKind::FsBidisc, s, 0.0};
}

CounterexampleFamily fp_family(double p) {
    require_p(p);
    return {FamilyKind::FpHartogs, p, std::log(3.0 * p - 4.0)};
}

CounterexampleFamily fp_log_family(double p) {
    require_p(p);
    return {FamilyKind::FpLogHartogs, p, std::log(3.0 * p - 4.0)};
}

CounterexampleFamily fp_log_family_from_log(double log_3pm4) {
    CounterexampleFamily fam;
    fam.kind = FamilyKind::FpLogHartogs;
    fam.log_3pm4 = log_3pm4;
    fam.param = 4.0 / 3.0 + std::exp(log_3pm4) / 3.0;
    return fam;
}

Complex family_eval(const CounterexampleFamily& fam, const CPoint& w) {
    switch (fam.kind) {
        case FamilyKind::FsBidisc: {
            const double s = fam.param;
            const double amp = std::pow(1.0 - s * s, 4);
            const double d1 = std::abs(1.0 - s * w[0]);
            const double d2 = std::abs(1.0 - s * w[1]);
            return Complex(amp / (d1 * d1 * d1 * d1 * d2 * d2 * d2 * d2), 0.0);
        }
        case FamilyKind::FpHartogs: {
            const double r = std::abs(w[1]);
            if (r <= 0.0) throw std::invalid_argument("family_eval: singular at z2 = 0");
            const double ppm1 = pprime_minus_1(fam);
            return std::conj(w[1]) * std::pow(r, -1.0 - ppm1);
        }
        case FamilyKind::FpLogHartogs: {
            const double r = std::abs(w[1]);
            if (r <= 0.0) throw std::invalid_argument("family_eval: singular at z2 = 0");
            const double ppm1 = pprime_minus_1(fam);
            return std::conj(w[1]) * std::pow(r, -1.0 - ppm1) / (1.0 - std::log(r));
        }
    }
    throw std::logic_error("family_eval: unhandled kind");
}

FunctionHandle family_handle(const CounterexampleFamily& fam) {
    FunctionHandle f;
    f.domain = fam.domain();
    f.eval = [fam](const CPoint& w) { return family_eval(fam, w); };
    switch (fam.kind) {
        case FamilyKind::FsBidisc: {
            const double s = fam.param;
            const double amp2 = std::pow(1.0 - s * s, 2);
            f.label = "f_s(s=" + std::to_string(s) + ")";
            f.singular_s = s;
            auto factor = [s, amp2](Complex w) {
                const double d = std::abs(1.0 - s * w);
                return Complex(amp2 / (d * d * d * d), 0.0);
            };
            f.uv_factors = {{factor, factor}};
            const double amp4 = amp2 * amp2;
            f.q_profile = FunctionHandle::QProfile{
                s, [amp4](double q1, double q2) {
                    return amp4 / (q1 * q1 * q1 * q1 * q2 * q2 * q2 * q2);
                }};
            break;
        }
        case FamilyKind::FpHartogs: {
            const double e = -pprime_minus_1(fam); // |f| = r^{1-p'} = r^{e}
            f.label = "f_p(p=" + std::to_string(fam.param) + ")";
            f.polar_data = std::vector<PolarMode>{
                {{0, -1}, [e](const std::vector<double>& r) {
                     return Complex(std::pow(r[1], 1.0 + e), 0.0) / r[1];
                 }}};
            f.radial_modulus = FunctionHandle::RadialModulus{
                1, [e](double r) { return std::pow(r, e); },
                [e](double t) { return -e * t; }};
            auto one = [](Complex) { return Complex(1.0, 0.0); };
            auto f2 = [e](Complex v) { return std::conj(v) * std::pow(std::abs(v), -1.0 + e); };
            f.uv_factors = {{one, f2}};
            break;
        }
        case FamilyKind::FpLogHartogs: {
            const double e = -pprime_minus_1(fam);
            f.label = "f_p,log(p=" + std::to_string(fam.param) + ")";
            f.radial_modulus = FunctionHandle::RadialModulus{
                1, [e](double r) { return std::pow(r, e) / (1.0 - std::log(r)); },
                [e](double t) { return -e * t - std::log1p(t); }};
            auto one = [](Complex) { return Complex(1.0, 0.0); };
            auto f2 = [e](Complex v) {
                const double r = std::abs(v);
                return std::conj(v) * std::pow(r, -1.0 + e) / (1.0 - std::log(r));
            };
            f.uv_factors = {{one, f2}};
            f.polar_data = std::vector<PolarMode>{
                {{0, -1}, [e](const std::vector<double>& r) {
                     return Complex(std::pow(r[1], e), 0.0) / (1.0 - std::log(r[1]));
                 }}};
            break;
        }
    }
    return f;
}

double projection_constant(const CounterexampleFamily& fam) {
    switch (fam.kind) {
        case FamilyKind::FsBidisc:
            throw std::invalid_argument("projection_constant: f_s projection is not c/z2");
        case FamilyKind::FpHartogs: {
            // <f_p, w2^-1> = int_H |w2|^{-p'} dV = 2 pi^2 int_0^1 r^{delta_c - 1} dr
            const double delta = std::exp(log_delta_c(fam));
            return 2.0 * radial_delta_integral(delta, [](double) { return 1.0; });
        }
        case FamilyKind::FpLogHartogs:
            // c = 2 e^{4-p'} E1(4-p') via the log-domain E1
            return 2.0 * exp_integral_expE1_log(log_delta_c(fam));
    }
    throw std::logic_error("projection_constant: unhandled kind");
}

double paper_projection_constant(const CounterexampleFamily& fam) {
    // Eq-style display (p-1)/(3p-4); for the log family the displayed
    // comparability is log(1/(3p-4)).
    if (fam.kind == FamilyKind::FpHartogs)
        return p_minus_1(fam) / std::exp(fam.log_3pm4);
    return -fam.log_3pm4;
}

Complex closed_form_projection(const CounterexampleFamily& fam, const CPoint& z) {
    if (fam.kind == FamilyKind::FsBidisc) {
        const double s = fam.param;
        const Complex a = 1.0 - s * z[0];
        const Complex b = 1.0 - s * z[1];
        return 1.0 / (a * a * b * b);
    }
    return projection_constant(fam) / z[1];
}

FunctionHandle projection_modulus_handle(const CounterexampleFamily& fam) {
    FunctionHandle f;
    f.domain = fam.domain();
    if (fam.kind == FamilyKind::FsBidisc) {
        const double s = fam.param;
        f.eval = [fam](const CPoint& z) { return closed_form_projection(fam, z); };
        f.label = "P(f_s)";
        f.singular_s = s;
        f.q_profile = FunctionHandle::QProfile{
            s, [](double q1, double q2) { return 1.0 / (q1 * q1 * q2 * q2); }};
        auto factor = [s](Complex w) {
            const Complex d = 1.0 - s * w;
            return 1.0 / (d * d);
        };
        f.uv_factors = {{factor, factor}};
        return f;
    }
    const double c = projection_constant(fam);
    f.eval = [c](const CPoint& z) { return c / z[1]; };
    f.label = "P(f_p)";
    f.radial_modulus = FunctionHandle::RadialModulus{1, [c](double r) { return c / r; },
                                                     [c](double t) { return std::log(c) + t; }};
    return f;
}

double family_norm_pow43(const CounterexampleFamily& fam) {
    switch (fam.kind) {
        case FamilyKind::FsBidisc:
            throw std::invalid_argument("family_norm_pow43: use fs_l1_norm for f_s");
        case FamilyKind::FpHartogs: {
            const double delta = std::exp(log_delta_norm(fam));
            return 2.0 * M_PI * M_PI * radial_delta_integral(delta, [](double) { return 1.0; });
        }
        case FamilyKind::FpLogHartogs: {
            // (-log|z2|+1)^{1/3}-weighted norm; quadrature when delta is
            // resolvable, E1 closed form below that
            const double ld = log_delta_norm(fam);
            if (ld < std::log(1e-8)) return family_norm_pow43_e1(fam);
            const double delta = std::exp(ld);
            return 2.0 * M_PI * M_PI *
                   radial_delta_integral(delta, [](double t) { return 1.0 / (1.0 + t); });
        }
    }
    throw std::logic_error("family_norm_pow43: unhandled kind");
}

double family_norm_pow43_e1(const CounterexampleFamily& fam) {
    if (fam.kind != FamilyKind::FpLogHartogs)
        throw std::invalid_argument("family_norm_pow43_e1: defined for the log family");
    return 2.0 * M_PI * M_PI * exp_integral_expE1_log(log_delta_norm(fam));
}

double fs_l1_norm(double s) {
    const double amp2 = std::pow(1.0 - s * s, 2);
    const double one_d =
        lens_integral([&](double q) { return amp2 / (q * q * q * q); }, s);
    return one_d * one_d;
}

} // namespace bergman
