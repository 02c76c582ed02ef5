#include "bergman/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bergman/gauss.hpp"
#include "bergman/lens.hpp"
#include "bergman/sampling.hpp"
#include "bergman/summation.hpp"

namespace bergman {

namespace {

// measure prefactor and r-power so that
// int_domain G(|z_c|) dV = pref * int_0^1 G(r) r^k dr
void radial_measure(const DomainSpec& domain, int coord, double& pref, int& k) {
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            pref = 2.0 * M_PI;
            k = 1;
            return;
        case DomainKind::Polydisc:
            pref = 2.0 * M_PI * std::pow(M_PI, domain.dimension - 1);
            k = 1;
            return;
        case DomainKind::HartogsTriangle:
            if (coord == 1) {
                pref = 2.0 * M_PI * M_PI;
                k = 3;
                return;
            }
            break;
    }
    throw std::invalid_argument("radial_measure: unsupported domain/coordinate");
}

// Samples kept in log space: the radial tails of the f_p family pair huge
// values with tiny weights whose product is moderate, so the exponents must
// be combined before exponentiating.
struct WeightedSamples {
    std::vector<double> log_value; // log |f| at the sample (-inf for zeros)
    std::vector<double> log_w;     // log of the positive quadrature weight
};

double log_of(double v) { return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity(); }

double radial_log_form(const FunctionHandle::RadialModulus& rm, double t) {
    if (rm.log_g_of_t) return rm.log_g_of_t(t);
    return log_of(rm.g(std::exp(-t)));
}

// t = -log r panels; geometric growth reaches t ~ 3e3 cheaply, which resolves
// r^{delta-1} mass down to delta ~ 2e-2 at full precision and degrades
// gracefully below.
Nodes1D log_radial_nodes(int order, double t_max) {
    std::vector<double> breaks{0.0};
    double h = 1.0 / 64.0;
    while (breaks.back() < t_max) {
        breaks.push_back(std::min(breaks.back() + h, t_max));
        h *= 1.6;
    }
    return composite_gauss(order, breaks);
}

// Collect (|f|, weight) pairs for lp/Orlicz functionals through the best
// available structure. level 0 is the production grid, level 1 a coarser
// companion used for the error estimate.
WeightedSamples gather_samples(const FunctionHandle& f, const DomainSpec& domain,
                               const std::optional<WeightSpec>& weight, const QuadratureRule& rule,
                               int level) {
    WeightedSamples s;
    if (f.q_profile && domain.kind == DomainKind::Polydisc && domain.dimension == 2 && !weight) {
        LensGrid g = lens_grid(f.q_profile->s, {}, level == 0 ? 16 : 10, level == 0 ? 40 : 28);
        const std::size_t n = g.q.size();
        s.log_value.resize(n * n);
        s.log_w.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                s.log_value[i * n + j] = log_of(f.q_profile->F(g.q[i], g.q[j]));
                s.log_w[i * n + j] = log_of(g.w[i] * g.w[j]);
            }
        return s;
    }
    if (f.radial_modulus) {
        const int coord = f.radial_modulus->coord;
        bool weight_ok = !weight || (weight->radial && weight->radial->coord == coord);
        double pref = 0.0;
        int k = 0;
        if (weight_ok) {
            try {
                radial_measure(domain, coord, pref, k);
            } catch (const std::invalid_argument&) {
                weight_ok = false; // no closed-form slab measure: generic path
            }
        }
        if (weight_ok) {
            // without a log form the modulus is evaluated at r = e^{-t}, so
            // the tail stops before r underflows
            const bool has_log = static_cast<bool>(f.radial_modulus->log_g_of_t) &&
                                 (!weight || static_cast<bool>(weight->radial->log_g_of_t));
            const double t_max = has_log ? (level == 0 ? 2.8e3 : 1.2e3) : 6.0e2;
            Nodes1D nodes = log_radial_nodes(level == 0 ? 12 : 8, t_max);
            const std::size_t n = nodes.size();
            s.log_value.resize(n);
            s.log_w.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = nodes.x[i];
                s.log_value[i] = radial_log_form(*f.radial_modulus, t);
                const double lw_weight = weight ? radial_log_form(*weight->radial, t) : 0.0;
                s.log_w[i] =
                    std::log(pref * nodes.w[i]) - (k + 1.0) * t + lw_weight;
            }
            return s;
        }
    }
    const QuadratureRule* r = &rule;
    QuadratureRule coarse;
    if (level != 0) {
        coarse = quadrature_rule(rule.domain, std::max(2, rule.radial_order * 2 / 3),
                                 std::max(2, rule.angular_order * 2 / 3), f.singular_s);
        r = &coarse;
    }
    const std::size_t n = r->node_count();
    s.log_value.resize(n);
    s.log_w.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        CPoint z;
        double w;
        r->node(static_cast<std::size_t>(i), z, w);
        s.log_value[static_cast<std::size_t>(i)] = log_of(std::abs(f.eval(z)));
        if (weight) w *= weight->eval(z);
        s.log_w[static_cast<std::size_t>(i)] = log_of(w);
    }
    return s;
}

double sum_power(const WeightedSamples& s, double p) {
    return map_sum(s.log_value.size(), [&](std::size_t i) {
        return std::exp(p * s.log_value[i] + s.log_w[i]);
    });
}

} // namespace

WeightSpec make_weight(const DomainSpec& domain, std::function<double(const CPoint&)> eval,
                       std::string label, std::optional<FunctionHandle::RadialModulus> radial) {
    WeightSpec w;
    w.eval = std::move(eval);
    w.label = std::move(label);
    w.radial = std::move(radial);
    // local integrability check: the mass must stabilize under refinement
    double coarse, fine;
    if (w.radial) {
        double pref;
        int k;
        radial_measure(domain, w.radial->coord, pref, k);
        auto mass = [&](double t_max) {
            // combined exponent: the weight and the e^{-(k+1)t} measure factor
            // can each overflow alone
            return pref * radial_integral_log(
                              [&](double t) {
                                  return std::exp(radial_log_form(*w.radial, t) - (k + 1.0) * t);
                              },
                              -1, t_max, 12);
        };
        coarse = mass(80.0);
        fine = mass(400.0);
    } else {
        auto wf = [&](const CPoint& z) { return Complex(w.eval(z), 0.0); };
        coarse = integrate_value(wf, quadrature_rule(domain, 24, 24)).real();
        fine = integrate_value(wf, quadrature_rule(domain, 48, 48)).real();
    }
    if (!std::isfinite(fine) || fine > 4.0 * std::max(coarse, 1e-300) + 1e-12)
        throw std::invalid_argument("make_weight: weight '" + w.label +
                                    "' is not locally integrable on " + domain.name());
    return w;
}

NormResult lp_norm(const FunctionHandle& f, const DomainSpec& domain, double p,
                   const std::optional<WeightSpec>& weight, const QuadratureRule& rule) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    const double full = sum_power(gather_samples(f, domain, weight, rule, 0), p);
    const double coarse = sum_power(gather_samples(f, domain, weight, rule, 1), p);

    NormResult res;
    res.value = std::pow(full, 1.0 / p);
    res.error = std::abs(std::pow(std::abs(coarse), 1.0 / p) - res.value);
    res.converged = std::isfinite(full) && res.error < 0.05 * std::max(res.value, 1e-300);
    return res;
}

double analytic_superlevel_measure(const FunctionHandle& f, const DomainSpec& domain, double t) {
    if (f.radial_modulus) {
        const auto& rm = *f.radial_modulus;
        const double eps = 1e-9;
        const double g_in = rm.g(eps), g_out = rm.g(1.0 - eps);
        const double vol = volume(domain);
        if (std::abs(g_in - g_out) < 1e-14 * (std::abs(g_in) + 1.0))
            return g_in > t ? vol : 0.0;
        const bool decreasing = g_in > g_out;
        double lo = eps, hi = 1.0 - eps;
        if (decreasing) {
            if (rm.g(lo) <= t) return 0.0;
            if (rm.g(hi) > t) return vol;
        } else {
            if (rm.g(hi) <= t) return 0.0;
            if (rm.g(lo) > t) return vol;
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const bool above = rm.g(mid) > t;
            if (above == decreasing)
                lo = mid;
            else
                hi = mid;
        }
        const double rstar = 0.5 * (lo + hi);
        const double below = radial_sublevel_measure(domain, rm.coord, rstar);
        return decreasing ? below : vol - below;
    }
    if (f.q_profile && domain.kind == DomainKind::Polydisc && domain.dimension == 2) {
        // F decreasing in each q; for each q1 find the q2 threshold and add
        // the lens area of {|1 - s z2| < q2*}
        const double s = f.q_profile->s;
        const auto& F = f.q_profile->F;
        auto inner_area = [&](double q1) {
            const double lo_q = 1.0 - s, hi_q = 1.0 + s;
            if (F(q1, lo_q * (1.0 + 1e-14) + 1e-300) <= t) return 0.0;
            if (F(q1, hi_q) > t) return M_PI;
            double lo = lo_q * (1.0 + 1e-14) + 1e-300, hi = hi_q;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (F(q1, mid) > t ? lo : hi) = mid;
            }
            return sublevel_area(0.5 * (lo + hi), s);
        };
        // kinks of q1 -> area: where the q2 threshold crosses 1 -/+ s
        std::vector<double> kinks;
        for (double edge : {(1.0 - s) * (1.0 + 1e-12) + 1e-300, (1.0 + s) * (1.0 - 1e-12)}) {
            double lo = (1.0 - s) * (1.0 + 1e-14) + 1e-300, hi = 1.0 + s;
            if (F(lo, edge) > t && F(hi, edge) < t) {
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (F(mid, edge) > t ? lo : hi) = mid;
                }
                kinks.push_back(0.5 * (lo + hi));
            }
        }
        return lens_integral(inner_area, s, kinks);
    }
    throw std::invalid_argument(
        "analytic_superlevel_measure: function carries no analytic structure");
}

double DistributionCurve::at(double t) const {
    if (samples.empty()) throw std::logic_error("DistributionCurve::at: empty curve");
    if (t <= samples.front().t) return samples.front().measure;
    if (t >= samples.back().t) return samples.back().measure;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].t >= t) {
            const auto &a = samples[i - 1], &b = samples[i];
            if (a.measure <= 0.0 || b.measure <= 0.0) return std::min(a.measure, b.measure);
            const double u = (std::log(t) - std::log(a.t)) / (std::log(b.t) - std::log(a.t));
            return std::exp((1.0 - u) * std::log(a.measure) + u * std::log(b.measure));
        }
    }
    return samples.back().measure;
}

DistributionCurve distribution(const FunctionHandle& f, const DomainSpec& domain,
                               const std::vector<double>& t_grid, const EstimatorSpec& est) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] <= 0.0 || (i > 0 && t_grid[i] <= t_grid[i - 1]))
            throw std::invalid_argument("distribution: t grid must be positive and increasing");
    }
    DistributionCurve curve;
    curve.estimator = est.kind;

    switch (est.kind) {
        case EstimatorKind::Analytic: {
            for (double t : t_grid)
                curve.samples.push_back({t, analytic_superlevel_measure(f, domain, t), 0.0});
            break;
        }
        case EstimatorKind::MonteCarlo: {
            SampleCloud cloud = sample(domain, est.count, est.seed);
            std::vector<double> vals(cloud.count());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = 0; i < static_cast<long long>(cloud.count()); ++i)
                vals[static_cast<std::size_t>(i)] =
                    std::abs(f.eval(cloud.points[static_cast<std::size_t>(i)]));
            std::sort(vals.begin(), vals.end());
            const double vol = volume(domain);
            const double n = static_cast<double>(vals.size());
            for (double t : t_grid) {
                const auto it = std::upper_bound(vals.begin(), vals.end(), t);
                const double frac = static_cast<double>(vals.end() - it) / n;
                const double se = std::sqrt(std::max(frac * (1.0 - frac), 1.0 / n) / n);
                curve.samples.push_back({t, vol * frac, vol * se});
            }
            break;
        }
        case EstimatorKind::Quadrature: {
            auto fill = [&](const QuadratureRule& r, std::vector<double>& v,
                            std::vector<double>& w) {
                v.resize(r.node_count());
                w.resize(r.node_count());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
                for (long long i = 0; i < static_cast<long long>(r.node_count()); ++i) {
                    CPoint z;
                    double ww;
                    r.node(static_cast<std::size_t>(i), z, ww);
                    v[static_cast<std::size_t>(i)] = std::abs(f.eval(z));
                    w[static_cast<std::size_t>(i)] = ww;
                }
            };
            QuadratureRule fine =
                quadrature_rule(domain, est.radial_order, est.angular_order, f.singular_s);
            QuadratureRule coarse = quadrature_rule(domain, std::max(2, est.radial_order * 2 / 3),
                                                    std::max(2, est.angular_order * 2 / 3),
                                                    f.singular_s);
            std::vector<double> vf, wf, vc, wc;
            fill(fine, vf, wf);
            fill(coarse, vc, wc);
            for (double t : t_grid) {
                const double mf =
                    map_sum(vf.size(), [&](std::size_t i) { return vf[i] > t ? wf[i] : 0.0; });
                const double mc =
                    map_sum(vc.size(), [&](std::size_t i) { return vc[i] > t ? wc[i] : 0.0; });
                curve.samples.push_back({t, mf, std::abs(mf - mc)});
            }
            break;
        }
    }
    return curve;
}

WeakQuasinorm weak_lp_quasinorm(const FunctionHandle& f, const DomainSpec& domain, double p,
                                const std::vector<double>& lambda_grid, const EstimatorSpec& est) {
    if (lambda_grid.size() < 2 || lambda_grid.back() / lambda_grid.front() < 999.0)
        throw std::invalid_argument("weak_lp_quasinorm: lambda grid must span >= 3 decades");
    DistributionCurve curve = distribution(f, domain, lambda_grid, est);
    WeakQuasinorm out;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const double v = curve.samples[i].t * std::pow(curve.samples[i].measure, 1.0 / p);
        if (v > out.value) {
            out.value = v;
            arg = i;
        }
    }
    out.lambda_at_max = curve.samples[arg].t;
    out.at_edge = out.value > 0.0 && (arg == 0 || arg + 1 == curve.samples.size());
    return out;
}

NormResult orlicz_norm(const FunctionHandle& f, const DomainSpec& domain, const OrliczSpec& spec,
                       double tol, const QuadratureRule& rule) {
    if (spec.p < 1.0 || spec.k < 0) throw std::invalid_argument("orlicz_norm: need p >= 1, k >= 0");
    WeightedSamples s = gather_samples(f, domain, std::nullopt, rule, 0);

    auto phi = [&](double lambda) {
        const double log_lambda = std::log(lambda);
        return map_sum(s.log_value.size(), [&](std::size_t i) {
            const double lv = s.log_value[i] - log_lambda; // log |f/lambda|
            double term = std::exp(spec.p * lv + s.log_w[i]);
            if (spec.k > 0) {
                if (lv <= 0.0) return 0.0;
                term *= std::pow(lv, spec.k);
            }
            return term;
        });
    };

    const double lp = std::pow(sum_power(s, spec.p), 1.0 / spec.p);
    if (!std::isfinite(lp)) throw std::invalid_argument("orlicz_norm: L^p mass not finite");
    if (lp <= 0.0) return {0.0, 0.0, true};

    // Phi is decreasing in lambda; keep the evaluated sequence monotone as a
    // self-check while expanding the bracket upward.
    double hi = std::exp(1.0) * lp;
    double phi_hi = phi(hi);
    int guard = 0;
    while (phi_hi > 1.0 && guard++ < 300) {
        const double next = hi * 2.0;
        const double phi_next = phi(next);
        if (phi_next > phi_hi * (1.0 + 1e-9))
            throw std::logic_error("orlicz_norm: Phi not decreasing in lambda");
        hi = next;
        phi_hi = phi_next;
    }
    if (phi_hi > 1.0) return {hi, hi, false};

    double lo = lp / std::exp(static_cast<double>(spec.k));
    guard = 0;
    while (phi(lo) < 1.0) {
        lo *= 0.5;
        if (lo < 1e-300 || guard++ > 2000) {
            // log+ vanishes on the whole range: no root, flag the edge
            return {lo, lo, false};
        }
    }

    for (int it = 0; it < 300; ++it) {
        const double mid = std::sqrt(lo * hi);
        (phi(mid) > 1.0 ? lo : hi) = mid;
        if (hi - lo <= tol * hi) break;
    }
    NormResult res;
    res.value = 0.5 * (lo + hi);
    res.error = hi - lo;
    res.converged = true;
    return res;
}

NormResult lorentz_p1_norm(const FunctionHandle& f, const DomainSpec& domain, double p,
                           const EstimatorSpec& est) {
    if (!(p > 1.0)) throw std::invalid_argument("lorentz_p1_norm: need p > 1");

    double vmax = 0.0;
    QuadratureRule probe = quadrature_rule(domain, 16, 16);
    for (std::size_t i = 0; i < probe.node_count(); ++i) {
        CPoint z;
        double w;
        probe.node(i, z, w);
        vmax = std::max(vmax, std::abs(f.eval(z)));
    }
    if (vmax <= 0.0) return {0.0, 0.0, true};

    const double t_lo = vmax * 1e-6;
    const double t_hi = vmax * 4.0;
    const int n = 4000;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] =
            t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n - 1));
    DistributionCurve curve = distribution(f, domain, grid, est);

    KahanSum acc;
    // head: mu saturates below t_lo
    acc.add(t_lo * std::pow(curve.samples.front().measure, 1.0 / p));
    for (std::size_t i = 1; i < curve.samples.size(); ++i) {
        const auto &a = curve.samples[i - 1], &b = curve.samples[i];
        acc.add(0.5 * (std::pow(a.measure, 1.0 / p) + std::pow(b.measure, 1.0 / p)) * (b.t - a.t));
    }

    NormResult res;
    res.converged = true;
    // tail: power-law fit over the last decade of positive measures
    std::vector<double> xs, ys;
    for (const auto& sm : curve.samples)
        if (sm.measure > 0.0 && sm.t >= curve.samples.back().t / 10.0) {
            xs.push_back(std::log(sm.t));
            ys.push_back(std::log(sm.measure));
        }
    if (xs.size() >= 3 && curve.samples.back().measure > 0.0) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double a = -slope;
        if (a / p > 1.0 + 1e-9) {
            const double T = curve.samples.back().t;
            const double muT = curve.samples.back().measure;
            acc.add(std::pow(muT, 1.0 / p) * T / (a / p - 1.0));
            res.value = acc.value();
        } else {
            res.converged = false;
            res.value = acc.value();
        }
    } else {
        res.value = acc.value();
    }
    return res;
}

double weak_type_ratio(const FunctionHandle& image, const DomainSpec& domain_out, double input_norm,
                       double p, double q, double lambda, const EstimatorSpec& est) {
    (void)p; // the input norm is already the L^p norm of the preimage
    if (!(input_norm > 0.0)) throw std::invalid_argument("weak_type_ratio: input norm must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("weak_type_ratio: lambda must be > 0");
    double mu;
    try {
        mu = analytic_superlevel_measure(image, domain_out, lambda);
    } catch (const std::invalid_argument&) {
        mu = distribution(image, domain_out, {lambda}, est).samples[0].measure;
    }
    return std::pow(lambda, q) * mu / std::pow(input_norm, q);
}

} // namespace bergman
