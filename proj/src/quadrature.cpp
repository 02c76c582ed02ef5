#include "bergman/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bergman/gauss.hpp"
#include "bergman/summation.hpp"

namespace bergman {

namespace {

PolarGrid make_polar_grid(int radial_order, int angular_order, int r_power,
                          std::optional<double> singular_s) {
    PolarGrid g;
    // Geometric panels toward r = 0 resolve the fractional powers r^alpha the
    // monomial inner products produce; with the singularity flag the panels
    // also refine toward r = 1 at the scale of 1 - s.
    std::vector<double> breaks{0.0, 0x1p-20, 0x1p-16, 0x1p-12, 0x1p-9, 0x1p-7,
                               0x1p-5, 0.125,  0.25,   0.5,    0.75};
    if (singular_s && *singular_s >= 0.9) {
        double tip = std::max(1e-12, (1.0 - *singular_s) / 8.0);
        double h = tip;
        std::vector<double> rev{1.0};
        while (1.0 - h > breaks.back() + h) {
            rev.push_back(1.0 - h);
            h *= 2.0;
        }
        breaks.insert(breaks.end(), rev.rbegin(), rev.rend());
    } else {
        breaks.push_back(1.0);
    }
    Nodes1D rad = composite_gauss(std::max(10, radial_order / 3), breaks);
    g.r = rad.x;
    g.wr.resize(rad.size());
    for (std::size_t i = 0; i < rad.size(); ++i)
        g.wr[i] = rad.w[i] * std::pow(rad.x[i], r_power);

    const int m = 2 * (angular_order + 1);
    g.theta.resize(m);
    for (int k = 0; k < m; ++k) g.theta[k] = 2.0 * M_PI * (k + 0.5) / m;
    g.wtheta = 2.0 * M_PI / m;
    return g;
}

} // namespace

QuadratureRule quadrature_rule(const DomainSpec& domain, int radial_order, int angular_order,
                               std::optional<double> singular_s) {
    if (radial_order < 1 || angular_order < 1)
        throw std::invalid_argument("quadrature_rule: orders must be >= 1");
    QuadratureRule rule;
    rule.domain = domain;
    rule.radial_order = radial_order;
    rule.angular_order = angular_order;
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            rule.grids.push_back(make_polar_grid(radial_order, angular_order, 1, singular_s));
            break;
        case DomainKind::Polydisc:
            for (int j = 0; j < domain.dimension; ++j)
                rule.grids.push_back(make_polar_grid(radial_order, angular_order, 1, singular_s));
            break;
        case DomainKind::HartogsTriangle:
            // (u,v) coordinates; v carries the r^2 Jacobian on top of r dr
            rule.grids.push_back(make_polar_grid(radial_order, angular_order, 1, singular_s));
            rule.grids.push_back(make_polar_grid(radial_order, angular_order, 3, singular_s));
            break;
    }
    return rule;
}

std::size_t QuadratureRule::node_count() const {
    std::size_t n = 1;
    for (const auto& g : grids) n *= g.nodes();
    return n;
}

void QuadratureRule::node(std::size_t idx, CPoint& z, double& w) const {
    w = 1.0;
    z.coords.resize(grids.size());
    std::size_t rem = idx;
    for (std::size_t c = grids.size(); c-- > 0;) {
        const PolarGrid& g = grids[c];
        const std::size_t local = rem % g.nodes();
        rem /= g.nodes();
        const std::size_t ir = local / g.theta.size();
        const std::size_t it = local % g.theta.size();
        z.coords[c] = std::polar(g.r[ir], g.theta[it]);
        w *= g.wr[ir] * g.wtheta;
    }
    if (domain.kind == DomainKind::HartogsTriangle) {
        // grid point (u,v) -> (u v, v)
        z.coords[0] *= z.coords[1];
    }
}

double QuadratureRule::weight_sum() const {
    const std::size_t n = node_count();
    return map_sum(n, [this](std::size_t i) {
        CPoint z;
        double w;
        node(i, z, w);
        return w;
    });
}

namespace {

Complex integrate_impl(const std::function<Complex(const CPoint&)>& f, const QuadratureRule& rule,
                       bool parallel) {
    const std::size_t n = rule.node_count();
    auto term = [&](std::size_t i) {
        CPoint z;
        double w;
        rule.node(i, z, w);
        Complex v = f(z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream os;
            os << "integrate: non-finite integrand at node (";
            for (int c = 0; c < z.dim(); ++c)
                os << z[c].real() << (z[c].imag() < 0 ? "-" : "+") << std::abs(z[c].imag()) << "i"
                   << (c + 1 < z.dim() ? ", " : "");
            os << ")";
            throw std::runtime_error(os.str());
        }
        return w * v;
    };
    return parallel ? map_sum_complex(n, term) : map_sum_complex_serial(n, term);
}

} // namespace

Complex integrate_value(const std::function<Complex(const CPoint&)>& f, const QuadratureRule& rule) {
    return integrate_impl(f, rule, true);
}

Complex integrate_value_serial(const std::function<Complex(const CPoint&)>& f,
                               const QuadratureRule& rule) {
    return integrate_impl(f, rule, false);
}

IntegrationResult integrate(const std::function<Complex(const CPoint&)>& f,
                            const QuadratureRule& rule) {
    IntegrationResult res;
    res.value = integrate_value(f, rule);
    QuadratureRule half = quadrature_rule(rule.domain, std::max(1, rule.radial_order / 2),
                                          std::max(1, rule.angular_order / 2));
    Complex coarse = integrate_value(f, half);
    res.error = std::abs(res.value - coarse);
    return res;
}

double radial_integral(const std::function<double(double)>& g, int k_measure, int order) {
    Nodes1D n = gauss_legendre(order, 0.0, 1.0);
    return map_sum(n.size(), [&](std::size_t i) {
        return n.w[i] * std::pow(n.x[i], k_measure) * g(n.x[i]);
    });
}

double radial_integral_log(const std::function<double(double)>& g_of_t, int k_measure, double t_max,
                           int order) {
    // int_0^1 g(r) r^k dr = int_0^inf g(e^-t) e^{-(k+1)t} dt, geometric panels
    std::vector<double> breaks{0.0};
    double h = 0.25;
    while (breaks.back() < t_max) {
        breaks.push_back(std::min(breaks.back() + h, t_max));
        h *= 1.7;
    }
    Nodes1D n = composite_gauss(order, breaks);
    return map_sum(n.size(), [&](std::size_t i) {
        return n.w[i] * std::exp(-(k_measure + 1.0) * n.x[i]) * g_of_t(n.x[i]);
    });
}

} // namespace bergman
