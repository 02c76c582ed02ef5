#include "bergman/projector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bergman/kernels.hpp"
#include "bergman/summation.hpp"

namespace bergman {

namespace {

bool is_hartogs(const DomainSpec& d) { return d.kind == DomainKind::HartogsTriangle; }

// Grid exponents of the monomial w^idx in projection coordinates: (a,b) on
// discs, (a, a+b) in the (u,v) chart of the Hartogs triangle.
std::pair<int, int> grid_exponents(const DomainSpec& d, MonomialIndex idx) {
    if (is_hartogs(d)) return {idx.a, idx.a + idx.b};
    return {idx.a, idx.b};
}

// conj(e^{i m theta_k}) tables for the angular DFT
std::vector<std::vector<Complex>> phase_table(const std::vector<double>& theta, int m_min,
                                              int m_max) {
    std::vector<std::vector<Complex>> tab(static_cast<std::size_t>(m_max - m_min + 1));
    for (int m = m_min; m <= m_max; ++m) {
        auto& row = tab[static_cast<std::size_t>(m - m_min)];
        row.resize(theta.size());
        for (std::size_t k = 0; k < theta.size(); ++k) row[k] = std::polar(1.0, -m * theta[k]);
    }
    return tab;
}

std::vector<std::vector<double>> power_table(const std::vector<double>& r, int m_min, int m_max) {
    std::vector<std::vector<double>> tab(static_cast<std::size_t>(m_max - m_min + 1));
    for (int m = m_min; m <= m_max; ++m) {
        auto& row = tab[static_cast<std::size_t>(m - m_min)];
        row.resize(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) row[i] = std::pow(r[i], m);
    }
    return tab;
}

// <f, w^idx> over a 1-D polar grid for all alpha in [0, n_max]
std::vector<Complex> inner_products_1d(const FunctionHandle& f, const PolarGrid& g, int n_max) {
    const std::size_t R = g.r.size(), M = g.theta.size();
    auto phases = phase_table(g.theta, 0, n_max);
    auto rpow = power_table(g.r, 0, n_max);

    std::vector<Complex> fvals(R * M);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(R * M); ++i) {
        const std::size_t ir = static_cast<std::size_t>(i) / M, it = static_cast<std::size_t>(i) % M;
        fvals[static_cast<std::size_t>(i)] = f.eval(CPoint(std::polar(g.r[ir], g.theta[it])));
    }

    std::vector<Complex> out(static_cast<std::size_t>(n_max + 1), Complex(0.0));
    for (std::size_t ir = 0; ir < R; ++ir) {
        for (int a = 0; a <= n_max; ++a) {
            KahanSumC acc;
            for (std::size_t it = 0; it < M; ++it)
                acc.add(fvals[ir * M + it] * phases[static_cast<std::size_t>(a)][it]);
            out[static_cast<std::size_t>(a)] +=
                g.wr[ir] * g.wtheta * rpow[static_cast<std::size_t>(a)][ir] * acc.value();
        }
    }
    return out;
}

// Per-coordinate factor inner products <f_j, c^alpha> on one grid. For the
// Hartogs v grid the measure weight already carries the |v|^2 Jacobian.
std::vector<Complex> factor_inner_products(const std::function<Complex(Complex)>& fj,
                                           const PolarGrid& g, int a_min, int a_max) {
    const std::size_t R = g.r.size(), M = g.theta.size();
    auto phases = phase_table(g.theta, a_min, a_max);
    auto rpow = power_table(g.r, a_min, a_max);

    std::vector<Complex> fvals(R * M);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(R * M); ++i) {
        const std::size_t ir = static_cast<std::size_t>(i) / M, it = static_cast<std::size_t>(i) % M;
        fvals[static_cast<std::size_t>(i)] = fj(std::polar(g.r[ir], g.theta[it]));
    }

    std::vector<Complex> out(static_cast<std::size_t>(a_max - a_min + 1), Complex(0.0));
    for (std::size_t ir = 0; ir < R; ++ir) {
        for (int a = a_min; a <= a_max; ++a) {
            const std::size_t ai = static_cast<std::size_t>(a - a_min);
            KahanSumC acc;
            for (std::size_t it = 0; it < M; ++it) acc.add(fvals[ir * M + it] * phases[ai][it]);
            out[ai] += g.wr[ir] * g.wtheta * rpow[ai][ir] * acc.value();
        }
    }
    return out;
}

CPoint grid_point(const DomainSpec& domain, Complex c1, Complex c2) {
    if (is_hartogs(domain)) return CPoint(c1 * c2, c2);
    return CPoint(c1, c2);
}

} // namespace

SpectralCoefficients project_series(const DomainSpec& domain, const FunctionHandle& f,
                                    int truncation, const QuadratureRule& rule) {
    if (!(rule.domain == domain))
        throw std::invalid_argument("project_series: rule built for a different domain");
    if (rule.angular_order < truncation)
        throw std::invalid_argument(
            "project_series: rule angular order too low for the requested truncation");
    if (truncation < 0) throw std::invalid_argument("project_series: truncation must be >= 0");

    SpectralCoefficients out;
    out.domain = domain;
    out.truncation = truncation;

    const auto indices = admissible_indices(domain, truncation);

    if (domain.dimension == 1) {
        auto ip = inner_products_1d(f, rule.grids[0], truncation);
        for (const auto& idx : indices)
            out.entries[{idx.a, idx.b}] =
                ip[static_cast<std::size_t>(idx.a)] / monomial_norm_sq(domain, idx);
    } else if (f.polar_data) {
        // finite list of angular modes: only matching indices survive, and the
        // surviving inner products are pure radial integrals
        const auto& g1 = rule.grids[0];
        const auto& g2 = rule.grids[1];
        for (const auto& idx : indices) {
            Complex val = 0.0;
            for (const auto& mode : *f.polar_data) {
                if (mode.m.size() != 2 || mode.m[0] != idx.a || mode.m[1] != idx.b) continue;
                auto [alpha, beta] = grid_exponents(domain, idx);
                const std::size_t n = g1.r.size() * g2.r.size();
                Complex radial = map_sum_complex(n, [&](std::size_t k) {
                    const std::size_t i = k / g2.r.size(), j = k % g2.r.size();
                    std::vector<double> rz(2);
                    if (is_hartogs(domain)) {
                        rz[0] = g1.r[i] * g2.r[j];
                        rz[1] = g2.r[j];
                    } else {
                        rz[0] = g1.r[i];
                        rz[1] = g2.r[j];
                    }
                    return g1.wr[i] * g2.wr[j] * mode.rho(rz) * std::pow(g1.r[i], alpha) *
                           std::pow(g2.r[j], beta);
                });
                val += 4.0 * M_PI * M_PI * radial;
            }
            out.entries[{idx.a, idx.b}] = val / monomial_norm_sq(domain, idx);
        }
    } else if (f.uv_factors) {
        const int b_min = is_hartogs(domain) ? -1 : 0;
        auto A = factor_inner_products((*f.uv_factors)[0], rule.grids[0], 0, truncation);
        auto B = factor_inner_products((*f.uv_factors)[1], rule.grids[1], b_min, truncation);
        for (const auto& idx : indices) {
            auto [alpha, beta] = grid_exponents(domain, idx);
            out.entries[{idx.a, idx.b}] = A[static_cast<std::size_t>(alpha)] *
                                          B[static_cast<std::size_t>(beta - b_min)] /
                                          monomial_norm_sq(domain, idx);
        }
    } else {
        // generic tensor path: angular DFT per radial pair, O(R^2 M^2 N)
        const auto& g1 = rule.grids[0];
        const auto& g2 = rule.grids[1];
        const std::size_t R1 = g1.r.size(), M1 = g1.theta.size();
        const std::size_t R2 = g2.r.size(), M2 = g2.theta.size();
        const int b_min = is_hartogs(domain) ? -1 : 0;
        const int A = truncation;

        auto ph1 = phase_table(g1.theta, 0, A);
        auto ph2 = phase_table(g2.theta, b_min, A);
        auto rp1 = power_table(g1.r, 0, A);
        auto rp2 = power_table(g2.r, b_min, A);

        const std::size_t na = static_cast<std::size_t>(A + 1);
        const std::size_t nb = static_cast<std::size_t>(A - b_min + 1);
        std::vector<Complex> table(na * nb, Complex(0.0));
        std::vector<Complex> fvals(M1 * M2);
        std::vector<Complex> G(na * M2);

        for (std::size_t i1 = 0; i1 < R1; ++i1) {
            for (std::size_t i2 = 0; i2 < R2; ++i2) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
                for (long long k = 0; k < static_cast<long long>(M1 * M2); ++k) {
                    const std::size_t t1 = static_cast<std::size_t>(k) / M2;
                    const std::size_t t2 = static_cast<std::size_t>(k) % M2;
                    fvals[static_cast<std::size_t>(k)] =
                        f.eval(grid_point(domain, std::polar(g1.r[i1], g1.theta[t1]),
                                          std::polar(g2.r[i2], g2.theta[t2])));
                }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
                for (long long a = 0; a <= A; ++a) {
                    for (std::size_t t2 = 0; t2 < M2; ++t2) {
                        KahanSumC acc;
                        for (std::size_t t1 = 0; t1 < M1; ++t1)
                            acc.add(fvals[t1 * M2 + t2] * ph1[static_cast<std::size_t>(a)][t1]);
                        G[static_cast<std::size_t>(a) * M2 + t2] = acc.value();
                    }
                }
                const double w12 = g1.wr[i1] * g2.wr[i2] * g1.wtheta * g2.wtheta;
                for (std::size_t ai = 0; ai < na; ++ai) {
                    for (std::size_t bi = 0; bi < nb; ++bi) {
                        KahanSumC acc;
                        for (std::size_t t2 = 0; t2 < M2; ++t2)
                            acc.add(G[ai * M2 + t2] * ph2[bi][t2]);
                        table[ai * nb + bi] += w12 * rp1[ai][i1] * rp2[bi][i2] * acc.value();
                    }
                }
            }
        }

        for (const auto& idx : indices) {
            auto [alpha, beta] = grid_exponents(domain, idx);
            out.entries[{idx.a, idx.b}] =
                table[static_cast<std::size_t>(alpha) * nb + static_cast<std::size_t>(beta - b_min)] /
                monomial_norm_sq(domain, idx);
        }
    }

    double tail = 0.0;
    for (const auto& idx : indices)
        if (total_degree(idx, domain) == truncation)
            tail = std::max(tail, std::abs(out.coeff(idx)));
    out.tail_estimate = tail;
    return out;
}

Complex eval_projection(const SpectralCoefficients& coeffs, const CPoint& z) {
    if (!contains(coeffs.domain, z))
        throw std::invalid_argument("eval_projection: point not interior to the domain");

    if (coeffs.domain.dimension == 1) {
        // Horner in descending degree
        Complex acc = 0.0;
        int prev = -1;
        for (auto it = coeffs.entries.rbegin(); it != coeffs.entries.rend(); ++it) {
            const int a = it->first.first;
            if (prev >= 0)
                for (int k = 0; k < prev - a; ++k) acc *= z[0];
            acc += it->second;
            prev = a;
        }
        for (int k = 0; k < prev; ++k) acc *= z[0];
        return acc;
    }

    // power table for z2 (negative exponents allowed on H)
    int b_lo = 0, b_hi = 0;
    for (const auto& [key, c] : coeffs.entries) {
        b_lo = std::min(b_lo, key.second);
        b_hi = std::max(b_hi, key.second);
    }
    std::vector<Complex> z2pow(static_cast<std::size_t>(b_hi - b_lo + 1));
    for (int b = b_lo; b <= b_hi; ++b) z2pow[static_cast<std::size_t>(b - b_lo)] = std::pow(z[1], b);

    KahanSumC acc;
    Complex z1pow = 1.0;
    int cur_a = 0;
    for (const auto& [key, c] : coeffs.entries) {
        while (cur_a < key.first) {
            z1pow *= z[0];
            ++cur_a;
        }
        acc.add(c * z1pow * z2pow[static_cast<std::size_t>(key.second - b_lo)]);
    }
    return acc.value();
}

namespace {

// Angular and radial resolution must follow the evaluation point: the kernel
// w -> K(z; conj w) concentrates at scale 1 - |z| near the boundary.
QuadratureRule disc_rule_for_point(Complex zeta, int radial_order, int angular_order,
                                   std::optional<double> f_singular_s) {
    const double a = std::abs(zeta);
    const int ang = std::min(4096, std::max(angular_order, static_cast<int>(8.0 / (1.0 - a))));
    double s = f_singular_s.value_or(0.0);
    s = std::max(s, a);
    std::optional<double> flag;
    if (s >= 0.9) flag = s;
    return quadrature_rule(DomainSpec::unit_disc(), radial_order, ang, flag);
}

ProjectionResult project_impl(const DomainSpec& domain, const FunctionHandle& f, const CPoint& z,
                              const QuadratureRule& rule, double tol, bool absolute) {
    if (!contains(domain, z))
        throw std::invalid_argument("project_quadrature: evaluation point not interior");

    auto run = [&](const QuadratureRule& r) -> Complex {
        if (f.uv_factors) {
            // kernels on product grids factor coordinatewise; on H,
            // K_H(z; conj w) = (z2 conj v)^{-1} K_D(z1/z2; conj u) K_D(z2; conj v)
            // and the |v|^2 Jacobian leaves an extra v on the second factor.
            if (is_hartogs(domain)) {
                const Complex zeta1 = z[0] / z[1];
                QuadratureRule r1 =
                    disc_rule_for_point(zeta1, r.radial_order, r.angular_order, f.singular_s);
                QuadratureRule r2 =
                    disc_rule_for_point(z[1], r.radial_order, r.angular_order, f.singular_s);
                Complex i1 = absolute
                                 ? integrate_value(
                                       [&](const CPoint& u) {
                                           return Complex(std::abs(kernel_disc(zeta1, u[0])) *
                                                          std::abs((*f.uv_factors)[0](u[0])));
                                       },
                                       r1)
                                 : integrate_value(
                                       [&](const CPoint& u) {
                                           return kernel_disc(zeta1, u[0]) * (*f.uv_factors)[0](u[0]);
                                       },
                                       r1);
                Complex i2 = absolute
                                 ? integrate_value(
                                       [&](const CPoint& v) {
                                           return Complex(std::abs(kernel_disc(z[1], v[0])) *
                                                          std::abs((*f.uv_factors)[1](v[0])) *
                                                          std::abs(v[0]));
                                       },
                                       r2)
                                 : integrate_value(
                                       [&](const CPoint& v) {
                                           return kernel_disc(z[1], v[0]) * (*f.uv_factors)[1](v[0]) *
                                                  v[0];
                                       },
                                       r2);
                return absolute ? i1 * i2 / std::abs(z[1]) : i1 * i2 / z[1];
            }
            Complex prod = 1.0;
            for (int j = 0; j < domain.dimension; ++j) {
                QuadratureRule rj =
                    disc_rule_for_point(z[j], r.radial_order, r.angular_order, f.singular_s);
                Complex ij =
                    absolute
                        ? integrate_value(
                              [&](const CPoint& w) {
                                  return Complex(std::abs(kernel_disc(z[j], w[0])) *
                                                 std::abs((*f.uv_factors)[static_cast<std::size_t>(j)](
                                                     w[0])));
                              },
                              rj)
                        : integrate_value(
                              [&](const CPoint& w) {
                                  return kernel_disc(z[j], w[0]) *
                                         (*f.uv_factors)[static_cast<std::size_t>(j)](w[0]);
                              },
                              rj);
                prod *= ij;
            }
            return prod;
        }
        if (absolute)
            return integrate_value(
                [&](const CPoint& w) {
                    return Complex(abs_kernel(domain, z, w) * std::abs(f.eval(w)));
                },
                r);
        return integrate_value([&](const CPoint& w) { return kernel(domain, z, w) * f.eval(w); },
                               r);
    };

    ProjectionResult res;
    res.value = run(rule);
    QuadratureRule half = quadrature_rule(rule.domain, std::max(2, rule.radial_order * 2 / 3),
                                          std::max(2, rule.angular_order * 2 / 3), f.singular_s);
    Complex coarse = run(half);
    res.error = std::abs(res.value - coarse);
    res.converged = res.error <= tol * std::max(1.0, std::abs(res.value));
    return res;
}

} // namespace

ProjectionResult project_quadrature(const DomainSpec& domain, const FunctionHandle& f,
                                    const CPoint& z, const QuadratureRule& rule, double tol) {
    return project_impl(domain, f, z, rule, tol, false);
}

ProjectionResult project_abs(const DomainSpec& domain, const FunctionHandle& f, const CPoint& z,
                             const QuadratureRule& rule, double tol) {
    return project_impl(domain, f, z, rule, tol, true);
}

std::string to_json(const SpectralCoefficients& coeffs) {
    nlohmann::json j;
    j["domain"] = coeffs.domain.name();
    j["truncation"] = coeffs.truncation;
    j["tail_estimate"] = coeffs.tail_estimate;
    auto entries = nlohmann::json::array();
    for (const auto& [key, c] : coeffs.entries)
        entries.push_back({key.first, key.second, c.real(), c.imag()});
    j["entries"] = entries;
    return j.dump(2);
}

SpectralCoefficients coefficients_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SpectralCoefficients out;
    out.domain = parse_domain(j.at("domain").get<std::string>());
    out.truncation = j.at("truncation").get<int>();
    out.tail_estimate = j.at("tail_estimate").get<double>();
    for (const auto& e : j.at("entries"))
        out.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] =
            Complex(e.at(2).get<double>(), e.at(3).get<double>());
    return out;
}

} // namespace bergman
