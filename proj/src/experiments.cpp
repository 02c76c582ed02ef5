#include "bergman/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/expint.hpp"
#include "bergman/gauss.hpp"
#include "bergman/lens.hpp"
#include "bergman/projector.hpp"
#include "bergman/summation.hpp"

namespace bergman {

namespace {

std::vector<double> log_range(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return out;
}

double radial_integral_t(const std::function<double(double)>& g_of_t, double delta, double t_cap) {
    const double t_max = std::min(80.0 / delta, t_cap);
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

SweepResult weak11_failure_sweep(const std::vector<double>& s_list) {
    for (std::size_t i = 1; i < s_list.size(); ++i)
        if (!(s_list[i] > s_list[i - 1]))
            throw std::invalid_argument("weak11_failure_sweep: s list must be increasing");
    SweepResult out;
    out.name = "weak11";
    out.x_label = "log(1/(1-s))";
    out.rows.resize(s_list.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(s_list.size()); ++i) {
        const double s = s_list[static_cast<std::size_t>(i)];
        const double lambda = lambda_from_s(s);
        CounterexampleFamily fam = fs_family(s);
        FunctionHandle image = projection_modulus_handle(fam);
        const double mu = analytic_superlevel_measure(image, fam.domain(), lambda);
        const double n1 = fs_l1_norm(s);
        SweepRow row;
        row.param = s;
        row.lambda = lambda;
        row.measure = mu;
        row.norm_pow = n1;
        row.ratio = lambda * mu / n1;
        out.rows[static_cast<std::size_t>(i)] = row;
    }
    std::vector<double> xs, ys;
    for (const auto& r : out.rows) {
        xs.push_back(std::log(1.0 / (1.0 - r.param)));
        ys.push_back(r.ratio);
    }
    out.fit = fit_line(xs, ys);
    return out;
}

SweepResult weak43_failure_sweep(const std::vector<double>& lambda_list) {
    if (lambda_list.size() < 2 || lambda_list.back() / lambda_list.front() < 9999.0)
        throw std::invalid_argument("weak43_failure_sweep: lambda list must span >= 4 decades");
    SweepResult out;
    out.name = "weak43";
    out.x_label = "lambda";
    for (double lambda : lambda_list) {
        const double p = p_from_lambda_power(lambda);
        CounterexampleFamily fam = fp_family(p);
        const double c = projection_constant(fam);
        SweepRow row;
        row.param = p;
        row.lambda = lambda;
        row.norm_pow = family_norm_pow43(fam);
        const double threshold = c / lambda;
        if (threshold >= 1.0) {
            row.valid = false;
            row.note = "threshold >= 1";
        } else {
            row.measure = radial_sublevel_measure(DomainSpec::hartogs(), 1, threshold);
            row.ratio = std::pow(lambda, 4.0 / 3.0) * row.measure / row.norm_pow;
        }
        out.rows.push_back(row);
    }
    std::vector<double> xs, ys;
    for (const auto& r : out.rows)
        if (r.valid && r.ratio > 0.0) {
            xs.push_back(r.lambda);
            ys.push_back(r.ratio);
        }
    out.fit = fit_loglog(xs, ys);
    return out;
}

namespace {

struct Weak44Case {
    std::string label;
    double norm4_pow;                          // ||f||_{L^4(H)}^4
    std::function<double(double)> superlevel; // lambda -> mu{|Pf| > lambda}
};

std::vector<Weak44Case> weak44_suite() {
    std::vector<Weak44Case> suite;
    const DomainSpec H = DomainSpec::hartogs();
    const double vol = volume(H);

    // P(1) = 1
    suite.push_back({"const1", vol, [vol](double l) { return l < 1.0 ? vol : 0.0; }});

    // f_p in L^4 for p > 2; P(f_p) = c_p / z2
    for (double p : {6.0, 3.0}) {
        CounterexampleFamily fam = fp_family(p);
        const double c = projection_constant(fam);
        suite.push_back({"f_p(p=" + std::to_string(static_cast<int>(p)) + ")", fp_l4_norm_pow(p),
                         [c, &H](double l) {
                             (void)H;
                             return c / l < 1.0
                                        ? radial_sublevel_measure(DomainSpec::hartogs(), 1, c / l)
                                        : volume(DomainSpec::hartogs());
                         }});
    }

    // holomorphic (1 - z2)^{-2/5}: projection is the function itself
    suite.push_back({"(1-z2)^-2/5", hartogs_norm4_inv_one_minus_z2(0.4), [](double l) {
                         const double c = std::pow(l, -2.5);
                         return hartogs_mass_near_one(c);
                     }});

    // |z2|: projection is the constant <|w2|,1>/||1||^2
    {
        const double c0 = (2.0 * M_PI * M_PI * radial_integral_t([](double) { return 1.0; }, 5.0, 1e4)) /
                          (M_PI * M_PI / 2.0);
        const double n4 = 2.0 * M_PI * M_PI * radial_integral_t([](double) { return 1.0; }, 8.0, 1e4);
        suite.push_back({"|z2|", n4, [c0](double l) {
                             return l < c0 ? volume(DomainSpec::hartogs()) : 0.0;
                         }});
    }
    return suite;
}

} // namespace

SweepResult weak44_bound_check(const std::vector<double>& lambda_grid) {
    SweepResult out;
    out.name = "weak44";
    out.x_label = "lambda";
    auto suite = weak44_suite();
    std::vector<double> max_xs, max_ys;
    for (double lambda : lambda_grid) {
        double suite_max = 0.0;
        for (std::size_t k = 0; k < suite.size(); ++k) {
            SweepRow row;
            row.param = static_cast<double>(k);
            row.lambda = lambda;
            row.measure = suite[k].superlevel(lambda);
            row.norm_pow = suite[k].norm4_pow;
            row.ratio = std::pow(lambda, 4.0) * row.measure / row.norm_pow;
            row.note = suite[k].label;
            out.rows.push_back(row);
            suite_max = std::max(suite_max, row.ratio);
        }
        out.suite_max = std::max(out.suite_max, suite_max);
        if (suite_max > 0.0) {
            max_xs.push_back(lambda);
            max_ys.push_back(suite_max);
        }
    }
    out.fit = fit_loglog(max_xs, max_ys);
    return out;
}

SweepResult orlicz_weight_failure_sweep(const std::vector<double>& lambda_list) {
    if (lambda_list.size() < 2 || lambda_list.back() / lambda_list.front() < 999.0)
        throw std::invalid_argument("orlicz_weight_failure_sweep: need >= 3 decades");
    SweepResult out;
    out.name = "weak43-logweight";
    out.x_label = "lambda";
    for (double lambda : lambda_list) {
        CounterexampleFamily fam = fp_log_family_from_log(log_3pm4_from_lambda_exp(lambda));
        const double c = projection_constant(fam);
        SweepRow row;
        row.param = fam.param;
        row.lambda = lambda;
        row.norm_pow = family_norm_pow43(fam);
        const double threshold = c / lambda;
        if (threshold >= 1.0) {
            row.valid = false;
            row.note = "threshold >= 1";
        } else {
            row.measure = radial_sublevel_measure(DomainSpec::hartogs(), 1, threshold);
            row.ratio = std::pow(lambda, 4.0 / 3.0) * row.measure / row.norm_pow;
        }
        out.rows.push_back(row);
    }
    std::vector<double> xs, ys;
    for (const auto& r : out.rows)
        if (r.valid && r.ratio > 0.0) {
            xs.push_back(r.lambda);
            ys.push_back(r.ratio);
        }
    out.fit = fit_loglog(xs, ys);
    return out;
}

SweepResult weighted_weak_check(double eps, bool log_weight,
                                const std::vector<double>& lambda_grid, bool remark410_coupling) {
    if (remark410_coupling) {
        if (!log_weight || std::abs(eps - 1.0 / 3.0) > 1e-12)
            throw std::invalid_argument(
                "weighted_weak_check: the coupled failure run is the log weight at eps = 1/3");
        return orlicz_weight_failure_sweep(lambda_grid);
    }
    if (log_weight ? !(eps > 1.0 / 3.0) : !(eps > 0.0))
        throw std::invalid_argument("weighted_weak_check: eps outside the theorem range");

    SweepResult out;
    out.name = log_weight ? "weighted-log" : "weighted-power";
    out.x_label = "lambda";
    std::vector<double> max_xs, max_ys;
    for (double p : {2.0, 3.0}) {
        CounterexampleFamily fam = fp_family(p);
        const double c = projection_constant(fam);
        // || f_p ||^{4/3} against the weight
        const double delta = 4.0 * (3.0 * p - 4.0) / (3.0 * (p - 1.0));
        double norm_pow;
        if (log_weight) {
            norm_pow = 2.0 * M_PI * M_PI *
                       radial_integral_t([eps](double t) { return std::pow(1.0 + t, eps); }, delta,
                                         1e9);
        } else {
            if (!(delta - eps > 0.0))
                throw std::invalid_argument("weighted_weak_check: weighted norm diverges");
            norm_pow = 2.0 * M_PI * M_PI *
                       radial_integral_t([](double) { return 1.0; }, delta - eps, 1e9);
        }
        for (double lambda : lambda_grid) {
            SweepRow row;
            row.param = p;
            row.lambda = lambda;
            row.norm_pow = norm_pow;
            row.note = "f_p(p=" + std::to_string(p) + ")";
            const double threshold = c / lambda;
            if (threshold >= 1.0) {
                row.valid = false;
                row.note += " threshold >= 1";
            } else {
                row.measure = radial_sublevel_measure(DomainSpec::hartogs(), 1, threshold);
                row.ratio = std::pow(lambda, 4.0 / 3.0) * row.measure / row.norm_pow;
            }
            out.rows.push_back(row);
            if (row.valid) out.suite_max = std::max(out.suite_max, row.ratio);
        }
    }
    for (const auto& r : out.rows)
        if (r.valid && r.ratio > 0.0 && r.param == 2.0) {
            max_xs.push_back(r.lambda);
            max_ys.push_back(r.ratio);
        }
    out.fit = fit_loglog(max_xs, max_ys);
    return out;
}

SweepResult polydisc_orlicz_weak_check(const std::vector<double>& s_list) {
    SweepResult out;
    out.name = "orlicz-polydisc-weak";
    out.x_label = "log(1/(1-s))";
    const DomainSpec D2 = DomainSpec::polydisc(2);
    QuadratureRule rule = quadrature_rule(D2, 32, 32);
    for (double s : s_list) {
        const double lambda = lambda_from_s(s);
        CounterexampleFamily fam = fs_family(s);
        FunctionHandle f = family_handle(fam);
        FunctionHandle image = projection_modulus_handle(fam);
        const double mu = analytic_superlevel_measure(image, D2, lambda);
        NormResult n = orlicz_norm(f, D2, OrliczSpec{1.0, 1}, 1e-10, rule);
        SweepRow row;
        row.param = s;
        row.lambda = lambda;
        row.measure = mu;
        row.norm_pow = n.value;
        row.ratio = lambda * mu / n.value;
        row.valid = n.converged;
        out.rows.push_back(row);
        out.suite_max = std::max(out.suite_max, row.ratio);
    }
    std::vector<double> xs, ys;
    for (const auto& r : out.rows) {
        xs.push_back(std::log(1.0 / (1.0 - r.param)));
        ys.push_back(r.ratio);
    }
    out.fit = fit_line(xs, ys);
    return out;
}

namespace {

std::vector<FunctionHandle> disc_orlicz_suite() {
    const DomainSpec D = DomainSpec::unit_disc();
    std::vector<FunctionHandle> suite;

    suite.push_back(constant_function(D, std::exp(1.0)));

    FunctionHandle holo;
    holo.domain = D;
    holo.label = "(1-0.9z)^-2";
    holo.eval = [](const CPoint& z) {
        const Complex d = 1.0 - 0.9 * z[0];
        return 1.0 / (d * d);
    };
    holo.singular_s = 0.9;
    suite.push_back(holo);

    FunctionHandle absker;
    absker.domain = D;
    absker.label = "|1-0.9z|^-2";
    absker.eval = [](const CPoint& z) {
        const double d = std::abs(1.0 - 0.9 * z[0]);
        return Complex(1.0 / (d * d), 0.0);
    };
    absker.singular_s = 0.9;
    suite.push_back(absker);

    FunctionHandle anti;
    anti.domain = D;
    anti.label = "conj(z)+2";
    anti.eval = [](const CPoint& z) { return std::conj(z[0]) + 2.0; };
    suite.push_back(anti);

    FunctionHandle radial;
    radial.domain = D;
    radial.label = "|z|^-1 (1-log|z|)^-3";
    radial.eval = [](const CPoint& z) {
        const double r = std::abs(z[0]);
        if (r <= 0.0) return Complex(0.0, 0.0);
        return Complex(1.0 / (r * std::pow(1.0 - std::log(r), 3)), 0.0);
    };
    radial.radial_modulus = FunctionHandle::RadialModulus{
        0, [](double r) { return 1.0 / (r * std::pow(1.0 - std::log(r), 3)); },
        [](double t) { return t - 3.0 * std::log1p(t); }};
    suite.push_back(radial);
    return suite;
}

} // namespace

SweepResult polydisc_orlicz_mapping_check(int k) {
    if (k < 0) throw std::invalid_argument("polydisc_orlicz_mapping_check: k >= 0");
    SweepResult out;
    out.name = "orlicz-mapping-k" + std::to_string(k);
    out.x_label = "function";
    const DomainSpec D = DomainSpec::unit_disc();
    QuadratureRule rule = quadrature_rule(D, 64, 40);
    QuadratureRule proj_rule = quadrature_rule(D, 96, 24, 0.9);
    auto suite = disc_orlicz_suite();
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const auto& f = suite[i];
        NormResult denom = orlicz_norm(f, D, OrliczSpec{1.0, k + 1}, 1e-10, rule);
        SpectralCoefficients coeffs = project_series(D, f, 20, proj_rule);
        FunctionHandle pf;
        pf.domain = D;
        pf.label = "P(" + f.label + ")";
        pf.eval = [coeffs](const CPoint& z) { return eval_projection(coeffs, z); };
        NormResult numer = orlicz_norm(pf, D, OrliczSpec{1.0, k}, 1e-10, rule);
        SweepRow row;
        row.param = static_cast<double>(i);
        row.lambda = 0.0;
        row.measure = numer.value;
        row.norm_pow = denom.value;
        row.ratio = denom.value > 0.0 ? numer.value / denom.value : 0.0;
        row.valid = numer.converged && denom.converged;
        row.note = f.label;
        out.rows.push_back(row);
        out.suite_max = std::max(out.suite_max, row.ratio);
    }
    return out;
}

FunctionHandle transport_to_bidisc(const FunctionHandle& f_on_hartogs) {
    if (f_on_hartogs.domain.kind != DomainKind::HartogsTriangle)
        throw std::invalid_argument("transport_to_bidisc: input must live on the Hartogs triangle");
    FunctionHandle g;
    g.domain = DomainSpec::polydisc(2);
    g.label = "transport(" + f_on_hartogs.label + ")";
    auto base = f_on_hartogs.eval;
    g.eval = [base](const CPoint& w) {
        if (std::abs(w[1]) == 0.0)
            throw std::invalid_argument("transported function: evaluation at z2 = 0");
        return w[1] * base(CPoint(w[0] * w[1], w[1]));
    };
    if (f_on_hartogs.uv_factors) {
        // f = f1(z1/z2) f2(z2)  =>  g(w1,w2) = f1(w1) * (w2 f2(w2))
        auto f1 = (*f_on_hartogs.uv_factors)[0];
        auto f2 = (*f_on_hartogs.uv_factors)[1];
        g.uv_factors = {{f1, [f2](Complex v) { return v * f2(v); }}};
    }
    if (f_on_hartogs.radial_modulus && f_on_hartogs.radial_modulus->coord == 1 &&
        f_on_hartogs.uv_factors) {
        auto base_rm = *f_on_hartogs.radial_modulus;
        std::function<double(double)> log_form;
        if (base_rm.log_g_of_t) {
            auto base_log = base_rm.log_g_of_t;
            log_form = [base_log](double t) { return base_log(t) - t; };
        }
        g.radial_modulus = FunctionHandle::RadialModulus{
            1, [base_rm](double r) { return r * base_rm.g(r); }, log_form};
    }
    return g;
}

namespace {

// 2-D polar quadrature with angular panels refined toward the kernel
// direction theta = 0; handles |1 - a e^{i theta}|^{-beta} concentration
// without equispaced-node blowup.
double disc_integral_kernel_type(const std::function<double(double, double)>& f_rt, double w_abs,
                                 int radial_order, int angular_order) {
    std::vector<double> rbreaks{0.0};
    // refine radially toward 1
    {
        std::vector<double> rev{1.0};
        double h = std::max(1e-9, (1.0 - w_abs) / 8.0);
        double pos = 1.0 - h;
        while (pos > 0.25) {
            rev.push_back(pos);
            h *= 2.0;
            pos = rev.back() - h;
        }
        rev.push_back(0.0);
        rbreaks.assign(rev.rbegin(), rev.rend());
    }
    Nodes1D rad = composite_gauss(radial_order, rbreaks);

    std::vector<double> tbreaks;
    {
        std::vector<double> fwd{0.0};
        double h = std::max(1e-10, (1.0 - w_abs) / 4.0);
        double pos = h;
        while (pos < M_PI - h) {
            fwd.push_back(pos);
            h *= 2.0;
            pos = fwd.back() + h;
        }
        fwd.push_back(M_PI);
        tbreaks = fwd;
    }
    Nodes1D ang = composite_gauss(angular_order, tbreaks);

    return map_sum(rad.size(), [&](std::size_t i) {
        KahanSum acc;
        for (std::size_t k = 0; k < ang.size(); ++k)
            acc.add(ang.w[k] * f_rt(rad.x[i], ang.x[k]));
        // integrand even in theta: double the [0,pi] half
        return 2.0 * rad.w[i] * rad.x[i] * acc.value();
    });
}

} // namespace

ForelliRudinResult forelli_rudin(double eps, double delta, Complex w, ForelliRudinKind kind) {
    if (!(eps < 1.0)) throw std::invalid_argument("forelli_rudin: need eps < 1");
    const double a = std::abs(w);
    if (!(a < 1.0)) throw std::invalid_argument("forelli_rudin: need |w| < 1");

    ForelliRudinResult out;
    auto value_at = [&](int order) {
        if (kind == ForelliRudinKind::AreaIntegral) {
            const double beta = 2.0 - eps - delta;
            return disc_integral_kernel_type(
                [&](double r, double th) {
                    const double q2 = 1.0 + a * a * r * r - 2.0 * a * r * std::cos(th);
                    return std::pow(std::max(1.0 - r * r, 1e-300), -eps) *
                           std::pow(std::max(q2, 1e-300), -0.5 * beta);
                },
                a, order, order);
        }
        const double beta = 1.0 - delta;
        std::vector<double> tbreaks{0.0};
        double h = std::max(1e-10, (1.0 - a) / 4.0);
        double pos = h;
        while (pos < M_PI - h) {
            tbreaks.push_back(pos);
            h *= 2.0;
            pos = tbreaks.back() + h;
        }
        tbreaks.push_back(M_PI);
        Nodes1D ang = composite_gauss(order, tbreaks);
        return 2.0 * map_sum(ang.size(), [&](std::size_t k) {
                   const double q2 = 1.0 + a * a - 2.0 * a * std::cos(ang.x[k]);
                   return ang.w[k] * std::pow(std::max(q2, 1e-300), -0.5 * beta);
               });
    };

    const double coarse = value_at(10);
    out.value = value_at(16);
    out.converged = std::abs(out.value - coarse) <= 1e-4 * std::max(1.0, std::abs(out.value));

    double profile;
    if (delta > 0.0) {
        out.regime = "bounded";
        profile = 1.0;
    } else if (delta == 0.0) {
        out.regime = "log";
        profile = -std::log(std::max(1.0 - a * a, 1e-300));
    } else {
        out.regime = "power";
        profile = std::pow(std::max(1.0 - a * a, 1e-300), delta);
    }
    out.comparability = out.value / profile;
    return out;
}

double fp_l4_norm_pow(double p) {
    if (!(p > 2.0)) throw std::invalid_argument("fp_l4_norm_pow: f_p is in L^4(H) only for p > 2");
    const double delta4 = 4.0 * (p - 2.0) / (p - 1.0);
    return 2.0 * M_PI * M_PI * radial_integral_t([](double) { return 1.0; }, delta4, 1e9);
}

namespace {

// int over { zeta : |zeta| < R(th), |1-zeta| < 1 } around zeta = 1 - z2 in
// shifted polar coordinates: |z2|^2 = 1 - 2 rho cos th + rho^2.
double shifted_disc_integral(const std::function<double(double, double)>& g_rho_th, double rho_cap) {
    // th in (-pi/2, pi/2), rho < min(2 cos th, rho_cap); even in th
    std::vector<double> tbreaks{0.0};
    double h = M_PI / 64.0;
    while (tbreaks.back() < M_PI / 2.0 - 1e-9) {
        tbreaks.push_back(std::min(tbreaks.back() + h, M_PI / 2.0));
        h *= 1.3;
    }
    Nodes1D ang = composite_gauss(12, tbreaks);
    return 2.0 * map_sum(ang.size(), [&](std::size_t k) {
               const double th = ang.x[k];
               const double R = std::min(2.0 * std::cos(th), rho_cap);
               if (R <= 0.0) return 0.0;
               std::vector<double> rb{0.0};
               double hh = R / 64.0;
               while (rb.back() < R - 1e-15) {
                   rb.push_back(std::min(rb.back() + hh, R));
                   hh *= 1.4;
               }
               Nodes1D rad = composite_gauss(12, rb);
               KahanSum acc;
               for (std::size_t i = 0; i < rad.size(); ++i)
                   acc.add(rad.w[i] * rad.x[i] * g_rho_th(rad.x[i], th));
               return ang.w[k] * acc.value();
           });
}

} // namespace

double hartogs_mass_near_one(double c) {
    if (c <= 0.0) return 0.0;
    // |{ z in H : |1 - z2| < c }| = pi int_{|1-v| < c} |v|^2 dV(v)
    return M_PI * shifted_disc_integral(
                      [](double rho, double th) {
                          return 1.0 - 2.0 * rho * std::cos(th) + rho * rho;
                      },
                      std::min(c, 2.0));
}

double hartogs_norm4_inv_one_minus_z2(double beta) {
    if (!(beta < 0.5))
        throw std::invalid_argument("hartogs_norm4_inv_one_minus_z2: need 4*beta < 2");
    return M_PI * shifted_disc_integral(
                      [beta](double rho, double th) {
                          return std::pow(rho, -4.0 * beta) *
                                 (1.0 - 2.0 * rho * std::cos(th) + rho * rho);
                      },
                      2.0);
}

} // namespace bergman
