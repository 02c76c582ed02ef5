#include "bergman/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/gauss.hpp"
#include "bergman/summation.hpp"

namespace bergman {

bool tent_contains(const TentSpec& tent, Complex w) {
    const double az = std::abs(tent.center);
    if (az == 0.0) return std::abs(w) < 1.0;
    const Complex dir = tent.center / az;
    return std::abs(1.0 - std::conj(w) * dir) < 1.0 - az;
}

namespace {

// Masked polar-cell integration over a tent with z != 0: classify cells,
// subdivide the boundary ones.
double masked_tent_integral(const TentSpec& tent, const std::function<double(const CPoint&)>& g,
                            int base_cells, int depth) {
    struct Cell {
        double r0, r1, t0, t1;
    };
    auto cell_state = [&](const Cell& c) {
        int inside = 0, total = 0;
        for (double r : {c.r0, 0.5 * (c.r0 + c.r1), c.r1})
            for (double t : {c.t0, 0.5 * (c.t0 + c.t1), c.t1}) {
                ++total;
                if (tent_contains(tent, std::polar(std::min(r, 1.0 - 1e-15), t))) ++inside;
            }
        if (inside == 0) return 0;
        if (inside == total) return 2;
        return 1;
    };
    static const Nodes1D g4 = gauss_legendre(4);
    auto cell_full = [&](const Cell& c) {
        double acc = 0.0;
        for (std::size_t i = 0; i < g4.size(); ++i) {
            const double r = 0.5 * (c.r0 + c.r1) + 0.5 * (c.r1 - c.r0) * g4.x[i];
            for (std::size_t k = 0; k < g4.size(); ++k) {
                const double t = 0.5 * (c.t0 + c.t1) + 0.5 * (c.t1 - c.t0) * g4.x[k];
                acc += 0.25 * (c.r1 - c.r0) * (c.t1 - c.t0) * g4.w[i] * g4.w[k] * r *
                       g(CPoint(std::polar(r, t)));
            }
        }
        return acc;
    };

    std::function<double(const Cell&, int)> visit = [&](const Cell& c, int lvl) -> double {
        const int st = cell_state(c);
        if (st == 0) return 0.0;
        if (st == 2) return cell_full(c);
        if (lvl >= depth) {
            const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
            if (!tent_contains(tent, std::polar(rm, tm))) return 0.0;
            return rm * (c.r1 - c.r0) * (c.t1 - c.t0) * g(CPoint(std::polar(rm, tm)));
        }
        const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
        return visit({c.r0, rm, c.t0, tm}, lvl + 1) + visit({rm, c.r1, c.t0, tm}, lvl + 1) +
               visit({c.r0, rm, tm, c.t1}, lvl + 1) + visit({rm, c.r1, tm, c.t1}, lvl + 1);
    };

    // The tent over z sits against the boundary point z/|z| with radial depth
    // and angular width of order 1 - |z|; the cell decomposition has to
    // resolve that scale or small tents are missed entirely.
    const double a0 = std::abs(tent.center);
    const double scale = std::max(1e-9, 1.0 - a0);
    const double theta_c = std::arg(tent.center);

    std::vector<double> rbreaks{0.0, 0.25, 0.5};
    {
        double h = scale / base_cells;
        std::vector<double> rev{1.0 - 1e-13};
        while (1.0 - h > 0.5 + h) {
            rev.push_back(1.0 - h);
            h *= 1.35;
        }
        rbreaks.insert(rbreaks.end(), rev.rbegin(), rev.rend());
    }
    std::vector<double> tbreaks{0.0};
    {
        double h = scale / base_cells;
        while (tbreaks.back() + h < M_PI) {
            tbreaks.push_back(tbreaks.back() + h);
            h *= 1.35;
        }
        tbreaks.push_back(M_PI);
    }

    const std::size_t nr = rbreaks.size() - 1;
    std::vector<double> result(nr);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(nr); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < tbreaks.size(); ++k) {
            // symmetric angular panels around the tent direction
            for (double sign : {-1.0, 1.0}) {
                const double t0 = theta_c + sign * tbreaks[k];
                const double t1 = theta_c + sign * tbreaks[k + 1];
                Cell c{rbreaks[static_cast<std::size_t>(i)],
                       rbreaks[static_cast<std::size_t>(i) + 1], std::min(t0, t1),
                       std::max(t0, t1)};
                acc += visit(c, 0);
            }
        }
        result[static_cast<std::size_t>(i)] = acc;
    }
    KahanSum total;
    for (double v : result) total.add(v);
    return total.value();
}

// Origin-tent (whole disc) integral of a radial weight with the radial cutoff
// pushed to r_min = 10^{-4 * 10^level}. The integrand is assembled from the
// log form so r^{-2}-type growth and the e^{-2t} measure cancel before
// exponentiating.
double log_radial_form(const FunctionHandle::RadialModulus& rm, double t) {
    if (rm.log_g_of_t) return rm.log_g_of_t(t);
    const double v = rm.g(std::exp(-t));
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

double origin_disc_integral(const FunctionHandle::RadialModulus& rm, int level) {
    const double t_max = 4.0 * std::log(10.0) * std::pow(10.0, level);
    std::vector<double> breaks{0.0};
    double h = 1.0 / 32.0;
    while (breaks.back() < t_max) {
        breaks.push_back(std::min(breaks.back() + h, t_max));
        h *= 1.5;
    }
    Nodes1D nodes = composite_gauss(12, breaks);
    return 2.0 * M_PI *
           map_sum(nodes.size(), [&](std::size_t i) {
               return nodes.w[i] * std::exp(log_radial_form(rm, nodes.x[i]) - 2.0 * nodes.x[i]);
           });
}

} // namespace

double tent_area(const TentSpec& tent, int base_cells, int depth) {
    if (std::abs(tent.center) == 0.0) return M_PI;
    return masked_tent_integral(tent, [](const CPoint&) { return 1.0; }, base_cells, depth);
}

TentIntegralSeries tent_integral_series(const TentSpec& tent,
                                        const std::function<double(const CPoint&)>& g,
                                        const std::optional<FunctionHandle::RadialModulus>& radial,
                                        int levels) {
    TentIntegralSeries out;
    if (std::abs(tent.center) == 0.0 && radial) {
        for (int l = 0; l < levels; ++l) out.estimates.push_back(origin_disc_integral(*radial, l));
    } else if (std::abs(tent.center) == 0.0) {
        for (int l = 0; l < levels; ++l) {
            QuadratureRule r = quadrature_rule(DomainSpec::unit_disc(), 48 + 32 * l, 48);
            out.estimates.push_back(
                integrate_value([&](const CPoint& z) { return Complex(g(z), 0.0); }, r).real());
        }
    } else {
        for (int l = 0; l < levels; ++l)
            out.estimates.push_back(masked_tent_integral(tent, g, 48 + 24 * l, 2 + l / 2));
    }
    int growing = 0;
    for (std::size_t i = 1; i < out.estimates.size(); ++i)
        if (out.estimates[i] >= 3.0 * out.estimates[i - 1]) ++growing;
    out.divergent = growing >= static_cast<int>(out.estimates.size()) - 1;
    return out;
}

std::vector<Complex> default_center_grid() {
    std::vector<Complex> centers{0.0};
    for (double r : {0.5, 0.9, 0.99, 0.999})
        for (int k = 0; k < 8; ++k) centers.push_back(std::polar(r, 2.0 * M_PI * k / 8.0));
    return centers;
}

BBResult bb_constant(const WeightSpec& mu, double p, const std::vector<Complex>& centers) {
    if (!(p > 1.0)) throw std::invalid_argument("bb_constant: need p > 1");
    if (centers.empty()) throw std::invalid_argument("bb_constant: center grid is empty");

    const double dual_pow = -1.0 / (p - 1.0);
    auto dual_eval = [&](const CPoint& z) { return std::pow(mu.eval(z), dual_pow); };
    std::optional<FunctionHandle::RadialModulus> dual_radial;
    if (mu.radial) {
        auto base = *mu.radial;
        dual_radial = FunctionHandle::RadialModulus{
            mu.radial->coord, [base, dual_pow](double r) { return std::pow(base.g(r), dual_pow); },
            [base, dual_pow](double t) { return dual_pow * log_radial_form(base, t); }};
    }

    BBResult out;
    for (const Complex& z : centers) {
        TentSpec tent{z};
        TentIntegralSeries im = tent_integral_series(tent, mu.eval, mu.radial);
        TentIntegralSeries id = tent_integral_series(tent, dual_eval, dual_radial);
        if (im.divergent || id.divergent) {
            out.divergent = true;
            out.divergent_center = z;
            // the sentinel value mirrors the growth of the underlying series
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
        const double area = tent_area(tent);
        const double prev = (im.estimates[im.estimates.size() - 2] / area) *
                            std::pow(id.estimates[id.estimates.size() - 2] / area, p - 1.0);
        const double cur = (im.estimates.back() / area) *
                           std::pow(id.estimates.back() / area, p - 1.0);
        if (cur > out.value) {
            out.value = cur;
            out.argmax_center = z;
            out.last_change = std::abs(cur - prev) / std::max(cur, 1e-300);
        }
    }
    return out;
}

IteratedLogWeight make_iterated_log_weight(int j, double alpha) {
    if (j < 1) throw std::invalid_argument("iterated log weight: j must be >= 1");
    if (!(alpha < -1.0))
        throw std::invalid_argument("iterated log weight: integrable only for alpha < -1");
    IteratedLogWeight w{j, alpha};
    // numeric check that the mass stabilizes for this j
    const double i1 = iterated_log_integral(w, 1e6);
    const double i2 = iterated_log_integral(w, 1e8);
    if (!std::isfinite(i2) || std::abs(i2 - i1) > 0.2 * std::abs(i2))
        throw std::invalid_argument("iterated log weight: mass did not stabilize numerically");
    return w;
}

double iterated_h(int j, double t) {
    double h = t + 1.0;
    for (int k = 1; k < j; ++k) h = std::log(h + 1.0) + 1.0;
    return h;
}

double iterated_log_eval(const IteratedLogWeight& w, Complex z) {
    const double az = std::abs(z);
    if (az <= 0.0) throw std::invalid_argument("iterated_log_eval: pole at z = 0");
    if (az > 1.0) throw std::invalid_argument("iterated_log_eval: |z| must be <= 1");
    const double t = -std::log(az);
    double val = 1.0 / (az * az);
    val *= std::pow(iterated_h(w.j, t), w.alpha);
    for (int k = 1; k < w.j; ++k) val /= iterated_h(k, t);
    return val;
}

double iterated_log_integral(const IteratedLogWeight& w, double t_max) {
    // int_D f dV = 2 pi int_0^inf W(t) dt with W = h_j^alpha prod_{k<j} h_k^{-1}
    auto W = [&](double t) {
        double v = std::pow(iterated_h(w.j, t), w.alpha);
        for (int k = 1; k < w.j; ++k) v /= iterated_h(k, t);
        return v;
    };
    std::vector<double> breaks{0.0};
    double h = 0.25;
    while (breaks.back() < t_max) {
        breaks.push_back(std::min(breaks.back() + h, t_max));
        h *= 1.6;
    }
    Nodes1D nodes = composite_gauss(14, breaks);
    const double head = map_sum(nodes.size(), [&](std::size_t i) { return nodes.w[i] * W(nodes.x[i]); });
    // substituting u = h_j, the tail is int_{h_j(T)}^inf u^alpha (1 + o(1)) du
    const double tail =
        std::pow(iterated_h(w.j, t_max), w.alpha + 1.0) / (-w.alpha - 1.0);
    return 2.0 * M_PI * (head + tail);
}

BBResult bb_constant_iterated(int j, double alpha, const std::vector<Complex>& centers) {
    IteratedLogWeight w = make_iterated_log_weight(j, alpha);
    // log f_{alpha,j} at r = e^{-t}: 2t + alpha log h_j - sum_{k<j} log h_k
    auto log_f = [w](double t) {
        double lf = 2.0 * t + w.alpha * std::log(iterated_h(w.j, t));
        for (int k = 1; k < w.j; ++k) lf -= std::log(iterated_h(k, t));
        return lf;
    };
    auto radial = FunctionHandle::RadialModulus{
        0, [w](double r) { return std::pow(iterated_log_eval(w, Complex(r, 0.0)), -1.0 / 3.0); },
        [log_f](double t) { return -log_f(t) / 3.0; }};
    WeightSpec mu;
    mu.eval = [w](const CPoint& z) { return std::pow(iterated_log_eval(w, z[0]), -1.0 / 3.0); };
    mu.label = "f_{" + std::to_string(alpha) + "," + std::to_string(j) + "}^{-1/3}";
    mu.radial = radial;
    return bb_constant(mu, 4.0 / 3.0, centers);
}

} // namespace bergman
