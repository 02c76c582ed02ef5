// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criterion 6 is asserted exactly as specified (log-log slope over
// lambda in [1e2, 1e6]); the measured transient makes that window fail, and
// the line reports the asymptotic-window slope alongside for the record.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/expint.hpp"
#include "bergman/experiments.hpp"
#include "bergman/io.hpp"
#include "bergman/projector.hpp"
#include "bergman/rng.hpp"
#include "bergman/sampling.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point origin = clock::now();
    return std::chrono::duration<double>(clock::now() - origin).count();
}

void report(int id, bool pass, const std::string& detail, double seconds) {
    std::printf("criterion %2d: %s  (%.2fs)  %s\n", id, pass ? "PASS" : "FAIL", seconds,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    // 1. reproducing identity on random polynomials, degree <= 8
    {
        const double t0 = now_seconds();
        SplitMix64 rng(2024);
        double worst = 0.0;

        const auto D = DomainSpec::unit_disc();
        QuadratureRule rule1 = quadrature_rule(D, 24, 12);
        std::vector<Complex> cs(9);
        for (auto& c : cs) c = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        FunctionHandle f1;
        f1.domain = D;
        f1.eval = [&cs](const CPoint& z) {
            Complex acc = 0.0;
            for (int a = 8; a >= 0; --a) acc = acc * z[0] + cs[static_cast<std::size_t>(a)];
            return acc;
        };
        SpectralCoefficients c1 = project_series(D, f1, 8, rule1);
        for (int a = 0; a <= 8; ++a)
            worst = std::max(worst, std::abs(c1.coeff({a, 0}) - cs[static_cast<std::size_t>(a)]));

        const auto D2 = DomainSpec::polydisc(2);
        QuadratureRule rule2 = quadrature_rule(D2, 24, 12);
        std::vector<std::vector<Complex>> cs2(9, std::vector<Complex>(9));
        for (auto& row : cs2)
            for (auto& c : row)
                c = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        FunctionHandle f2;
        f2.domain = D2;
        f2.eval = [&cs2](const CPoint& z) {
            Complex acc = 0.0;
            for (int a = 0; a <= 8; ++a)
                for (int b = 0; a + b <= 8; ++b)
                    acc += cs2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                           std::pow(z[0], a) * std::pow(z[1], b);
            return acc;
        };
        SpectralCoefficients c2 = project_series(D2, f2, 8, rule2);
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b)
                worst = std::max(
                    worst, std::abs(c2.coeff({a, b}) -
                                    cs2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));

        const double dt = now_seconds() - t0;
        report(1, worst < 1e-10 && dt < 1.0, "max coefficient error " + fmt(worst), dt);
    }

    // 2. closed-form projection of f_s at s = 0.5, truncation 64
    {
        const double t0 = now_seconds();
        const auto D2 = DomainSpec::polydisc(2);
        CounterexampleFamily fam = fs_family(0.5);
        QuadratureRule rule = quadrature_rule(D2, 64, 64, 0.5);
        SpectralCoefficients coeffs = project_series(D2, family_handle(fam), 64, rule);
        SampleCloud pts = sample(D2, 100, 0x5EED);
        double worst = 0.0;
        for (const auto& z : pts.points) {
            const Complex expect = closed_form_projection(fam, z);
            worst = std::max(worst,
                             std::abs(eval_projection(coeffs, z) - expect) / std::abs(expect));
        }
        const double dt = now_seconds() - t0;
        report(2, worst < 1e-6 && dt < 10.0, "max rel err " + fmt(worst) + " at 100 points", dt);
    }

    // 3. ||f_s||_L1 = pi^2
    {
        const double t0 = now_seconds();
        double worst = 0.0;
        for (double s : {0.3, 0.6, 0.9}) {
            const auto D2 = DomainSpec::polydisc(2);
            QuadratureRule rule = quadrature_rule(D2, 48, 48, s);
            const double by_rule =
                lp_norm(family_handle(fs_family(s)), D2, 1.0, std::nullopt, rule).value;
            worst = std::max(worst, std::abs(by_rule - M_PI * M_PI) / (M_PI * M_PI));
            const double by_lens = fs_l1_norm(s);
            worst = std::max(worst, std::abs(by_lens - M_PI * M_PI) / (M_PI * M_PI));
        }
        report(3, worst < 1e-4, "max rel deviation from pi^2: " + fmt(worst), now_seconds() - t0);
    }

    // 4. weak-(1,1) failure on the bidisc
    {
        const double t0 = now_seconds();
        std::vector<double> s_list;
        for (int m = 3; m <= 10; ++m) s_list.push_back(1.0 - std::pow(2.0, -m));
        SweepResult sweep = weak11_failure_sweep(s_list);
        bool increasing = true;
        for (std::size_t i = 1; i < sweep.rows.size(); ++i)
            increasing = increasing && sweep.rows[i].ratio > sweep.rows[i - 1].ratio;
        const double dt = now_seconds() - t0;
        report(4,
               increasing && sweep.fit.slope > 0.0 && sweep.fit.r_squared > 0.95 && dt < 120.0,
               "increasing=" + std::string(increasing ? "yes" : "no") +
                   " slope=" + fmt(sweep.fit.slope) + " R2=" + fmt(sweep.fit.r_squared),
               dt);
    }

    // 5. Hartogs structure: z2 P(f_p) constant, oracle match, factor-2 record
    {
        const double t0 = now_seconds();
        bool pass = true;
        std::string detail;
        for (double p : {1.6, 2.4}) {
            CounterexampleFamily fam = fp_family(p);
            const auto H = DomainSpec::hartogs();
            QuadratureRule rule = quadrature_rule(H, 64, 8);
            SpectralCoefficients coeffs = project_series(H, family_handle(fam), 6, rule);
            SampleCloud pts = sample(H, 20, 91);
            double lo = 1e300, hi = 0.0;
            for (const auto& z : pts.points) {
                const double v = std::abs(eval_projection(coeffs, z) * z[1]);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            const double spread = (hi - lo) / hi;
            const double oracle_c = projection_constant(fam);
            const double series_c = 0.5 * (hi + lo);
            const double mismatch = std::abs(series_c - oracle_c) / oracle_c;
            const double factor = oracle_c / paper_projection_constant(fam);
            pass = pass && spread < 1e-6 && mismatch < 1e-6 && std::abs(factor - 2.0) < 1e-6;
            if (p == 1.6)
                detail = "p=1.6: spread=" + fmt(spread) + " oracle_mismatch=" + fmt(mismatch) +
                         " measured/printed constant=" + fmt(factor);
        }
        report(5, pass, detail, now_seconds() - t0);
    }

    // 6. weak-(4/3,4/3) failure: slope over the specified window [1e2, 1e6]
    {
        const double t0 = now_seconds();
        SweepResult sweep = weak43_failure_sweep(log_grid(1e2, 1e6, 17));
        SweepResult asym = weak43_failure_sweep(log_grid(1e6, 1e10, 17));
        const double slope = sweep.fit.slope;
        const bool pass = std::abs(slope - 1.0 / 30.0) <= 0.005;
        report(6, pass,
               "slope[1e2,1e6]=" + fmt(slope) + " (target 1/30=0.03333 +/- 0.005); " +
                   "asymptotic window [1e6,1e10] slope=" + fmt(asym.fit.slope) +
                   "; the (p-1)^3 transient in the exact ratio biases the specified window",
               now_seconds() - t0);
    }

    // 7. weak-(4,4) boundedness over the 5-function suite
    {
        const double t0 = now_seconds();
        SweepResult sweep = weak44_bound_check(log_grid(1.0, 1e3, 13));
        const bool pass = std::abs(sweep.fit.slope) < 0.01 && sweep.suite_max > 0.0;
        report(7, pass,
               "suite max ratio=" + fmt(sweep.suite_max) + " trend slope=" + fmt(sweep.fit.slope),
               now_seconds() - t0);
    }

    // 8. transport isometry and conjugation identity
    {
        const double t0 = now_seconds();
        const auto H = DomainSpec::hartogs();
        const auto D2 = DomainSpec::polydisc(2);
        QuadratureRule hrule = quadrature_rule(H, 48, 24);
        QuadratureRule drule = quadrature_rule(D2, 48, 24);
        WeightSpec w2m2 = make_weight(
            D2, [](const CPoint& z) { return std::pow(std::abs(z[1]), -2.0); }, "|z2|^-2",
            FunctionHandle::RadialModulus{1, [](double r) { return std::pow(r, -2.0); }, [](double t) { return 2.0 * t; }});

        double worst_iso = 0.0;
        std::vector<FunctionHandle> fs;
        fs.push_back(family_handle(fp_family(6.0)));
        fs.push_back(family_handle(fp_family(3.0)));
        {
            FunctionHandle f;
            f.domain = H;
            f.label = "z1";
            f.eval = [](const CPoint& z) { return z[0]; };
            f.uv_factors = {{[](Complex u) { return u; }, [](Complex v) { return v; }}};
            fs.push_back(f);
        }
        for (const auto& f : fs) {
            FunctionHandle g = transport_to_bidisc(f);
            const double lhs = lp_norm(g, D2, 4.0, w2m2, drule).value;
            const double rhs = lp_norm(f, H, 4.0, std::nullopt, hrule).value;
            worst_iso = std::max(worst_iso, std::abs(lhs - rhs) / rhs);
        }

        // conjugation identity at 20 points for 3 functions
        QuadratureRule hsrule = quadrature_rule(H, 32, 12);
        QuadratureRule dsrule = quadrature_rule(D2, 32, 12);
        double worst_conj = 0.0;
        std::vector<FunctionHandle> cf;
        cf.push_back(family_handle(fp_family(2.0)));
        {
            FunctionHandle f;
            f.domain = H;
            f.eval = [](const CPoint& z) {
                const double u = std::abs(z[0] / z[1]);
                return Complex(u * u, 0.0) * z[1];
            };
            cf.push_back(f);
            FunctionHandle h;
            h.domain = H;
            h.eval = [](const CPoint& z) { return std::conj(z[1]) * std::abs(z[1]); };
            cf.push_back(h);
        }
        SampleCloud pts = sample(H, 20, 47);
        for (const auto& f : cf) {
            FunctionHandle g;
            g.domain = D2;
            g.eval = [&f](const CPoint& w) { return w[1] * f.eval(CPoint(w[0] * w[1], w[1])); };
            SpectralCoefficients pf = project_series(H, f, 10, hsrule);
            SpectralCoefficients pg = project_series(D2, g, 10, dsrule);
            for (const auto& z : pts.points) {
                const double lhs = std::abs(eval_projection(pf, z));
                const double rhs =
                    std::abs(eval_projection(pg, CPoint(z[0] / z[1], z[1]))) / std::abs(z[1]);
                worst_conj = std::max(worst_conj, std::abs(lhs - rhs) / std::max(1.0, rhs));
            }
        }
        report(8, worst_iso < 1e-6 && worst_conj < 1e-6,
               "isometry max rel err " + fmt(worst_iso) + ", conjugation max err " +
                   fmt(worst_conj),
               now_seconds() - t0);
    }

    // 9. Forelli-Rudin regime classification with fixed windows
    {
        const double t0 = now_seconds();
        bool pass = true;
        std::string detail;
        struct Case {
            double delta, eps;
            std::string regime;
            double lo, hi;
        };
        for (const auto& c :
             {Case{1.0, 0.0, "bounded", 0.0, 20.0}, Case{0.0, 0.0, "log", 0.2, 5.0},
              Case{-0.5, 0.0, "power", 0.5, 10.0}, Case{0.0, 0.5, "log", 0.5, 10.0}}) {
            std::vector<double> vals;
            for (double a : {0.9, 0.99, 0.999}) {
                ForelliRudinResult r =
                    forelli_rudin(c.eps, c.delta, Complex(a, 0.0), ForelliRudinKind::AreaIntegral);
                pass = pass && r.regime == c.regime && r.converged;
                vals.push_back(r.comparability);
            }
            if (c.regime == "bounded") {
                ForelliRudinResult r0 =
                    forelli_rudin(c.eps, c.delta, Complex(0.0, 0.0), ForelliRudinKind::AreaIntegral);
                vals.push_back(r0.value);
                double lo = vals[0], hi = vals[0];
                for (double v : vals) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                pass = pass && hi / lo < c.hi;
                detail += "(1,0) max/min=" + fmt(hi / lo) + " ";
            } else {
                for (double v : vals) pass = pass && v > c.lo && v < c.hi;
            }
        }
        report(9, pass, detail + "log/power comparability inside fixed windows",
               now_seconds() - t0);
    }

    // 10. Bekolle-Bonami constants
    {
        const double t0 = now_seconds();
        WeightSpec good = make_weight(
            DomainSpec::unit_disc(),
            [](const CPoint& z) { return std::pow(std::abs(z[0]), 1.0 / 3.0); }, "|w|^{1/3}",
            FunctionHandle::RadialModulus{0, [](double r) { return std::pow(r, 1.0 / 3.0); }, [](double t) { return -t / 3.0; }});
        BBResult finite = bb_constant(good, 4.0 / 3.0, default_center_grid());

        WeightSpec bad = make_weight(
            DomainSpec::unit_disc(),
            [](const CPoint& z) { return std::pow(std::abs(z[0]), 2.0 / 3.0); }, "|w|^{2/3}",
            FunctionHandle::RadialModulus{0, [](double r) { return std::pow(r, 2.0 / 3.0); }, [](double t) { return -2.0 * t / 3.0; }});
        TentIntegralSeries dualseries = tent_integral_series(
            TentSpec{0.0}, [](const CPoint& z) { return std::pow(std::abs(z[0]), -2.0); },
            FunctionHandle::RadialModulus{0, [](double r) { return std::pow(r, -2.0); }, [](double t) { return 2.0 * t; }});
        BBResult divergent = bb_constant(bad, 4.0 / 3.0, default_center_grid());

        BBResult it1 = bb_constant_iterated(1, -2.0, default_center_grid());
        BBResult it2 = bb_constant_iterated(2, -2.0, default_center_grid());

        const bool pass = !finite.divergent && finite.last_change < 0.01 && divergent.divergent &&
                          dualseries.divergent &&
                          dualseries.estimates.back() >= 10.0 * dualseries.estimates.front() &&
                          !it1.divergent && std::isfinite(it1.value) && !it2.divergent &&
                          std::isfinite(it2.value);
        report(10, pass,
               "B(|w|^{1/3})=" + fmt(finite.value) + " (final change " + fmt(finite.last_change) +
                   "), eps=0 sentinel=" + (divergent.divergent ? "yes" : "no") +
                   ", iterated j=1: " + fmt(it1.value) + ", j=2: " + fmt(it2.value),
               now_seconds() - t0);
    }

    // 11. exponential integral and Eq (4.21)
    {
        const double t0 = now_seconds();
        double worst = 0.0;
        bool sandwich = true;
        for (int i = 0; i <= 40; ++i) {
            const double x = 1e-3 * std::pow(10.0, 4.0 * i / 40.0);
            // brute force of the defining integral on a truncated range
            double brute = 0.0;
            {
                const int n = 4000;
                const double hi = x + 60.0;
                double acc = 0.0;
                double prev = std::exp(-x) / x;
                double prev_t = x;
                for (int kk = 1; kk <= n; ++kk) {
                    const double t = x * std::pow(hi / x, static_cast<double>(kk) / n);
                    const double v = std::exp(-t) / t;
                    acc += 0.5 * (prev + v) * (t - prev_t);
                    prev = v;
                    prev_t = t;
                }
                brute = acc;
            }
            const double e1 = exp_integral_E1(x);
            worst = std::max(worst, std::abs(e1 - brute) / brute);
            sandwich = sandwich && e1 > e1_lower_bound(x) && e1 < e1_upper_bound(x);
        }
        IteratedLogWeight w = make_iterated_log_weight(1, -2.0);
        const double mass = iterated_log_integral(w);
        const double mass_err = std::abs(mass - 2.0 * M_PI) / (2.0 * M_PI);
        report(11, worst < 1e-8 && sandwich && mass_err < 1e-6,
               "E1 vs brute force max rel " + fmt(worst) + ", sandwich " +
                   (sandwich ? "holds" : "fails") + ", int f_{-2,1} err " + fmt(mass_err),
               now_seconds() - t0);
    }

    // 12. Orlicz machinery
    {
        const double t0 = now_seconds();
        const auto D = DomainSpec::unit_disc();
        QuadratureRule rule = quadrature_rule(D, 32, 16);

        FunctionHandle f;
        f.domain = D;
        f.eval = [](const CPoint& z) {
            const double d = std::abs(1.0 - 0.9 * z[0]);
            return Complex(1.0 / (d * d), 0.0) + 0.3 * z[0];
        };
        FunctionHandle f2;
        f2.domain = D;
        f2.eval = [&f](const CPoint& z) { return 2.0 * f.eval(z); };
        const double a = orlicz_norm(f, D, OrliczSpec{1.0, 1}, 1e-12, rule).value;
        const double b = orlicz_norm(f2, D, OrliczSpec{1.0, 1}, 1e-12, rule).value;
        const double homo_err = std::abs(b - 2.0 * a) / (2.0 * a);

        const double lp = lp_norm(f, D, 1.5, std::nullopt, rule).value;
        const double ok0 = orlicz_norm(f, D, OrliczSpec{1.5, 0}, 1e-13, rule).value;
        const double degen_err = std::abs(ok0 - lp) / lp;

        double map_max = 0.0;
        bool map_ok = true;
        for (int k : {0, 1}) {
            SweepResult map = polydisc_orlicz_mapping_check(k);
            for (const auto& r : map.rows) {
                map_ok = map_ok && r.valid && r.ratio < 10.0;
                map_max = std::max(map_max, r.ratio);
            }
        }

        std::vector<double> s_list;
        for (int m = 3; m <= 10; ++m) s_list.push_back(1.0 - std::pow(2.0, -m));
        SweepResult weak = polydisc_orlicz_weak_check(s_list);
        SweepResult l1 = weak11_failure_sweep(s_list);
        const bool weak_ok =
            weak.suite_max < 0.5 && l1.rows.back().ratio / l1.rows.front().ratio > 2.0;

        report(12,
               homo_err < 1e-8 && degen_err < 1e-10 && map_ok && weak_ok,
               "homogeneity err " + fmt(homo_err) + ", k=0 degeneration err " + fmt(degen_err) +
                   ", mapping max " + fmt(map_max) + ", weak LlogL max " + fmt(weak.suite_max) +
                   " (L1 ratio grew " + fmt(l1.rows.back().ratio / l1.rows.front().ratio) + "x)",
               now_seconds() - t0);
    }

    // 13. determinism: identical config -> byte-identical output
    {
        const double t0 = now_seconds();
        auto run_once = [&]() {
            SweepResult s = weak43_failure_sweep(log_grid(1e2, 1e6, 9));
            return sweep_to_csv(s, "fixed");
        };
        const std::string run1 = run_once();
        const std::string run2 = run_once();
        bool pass = run1 == run2 && !run1.empty();

        std::string cli_note = "library rerun byte-identical";
        if (!cli_path.empty()) {
            const std::string base = "/tmp/bergman_det";
            const std::string cmd1 = cli_path +
                                     " sweep weak43 --lambda-lo 1e2 --lambda-hi 1e5 --lambda-n 5 "
                                     "--out " +
                                     base + "1.csv > /dev/null 2>&1";
            const std::string cmd2 = cli_path +
                                     " sweep weak43 --lambda-lo 1e2 --lambda-hi 1e5 --lambda-n 5 "
                                     "--out " +
                                     base + "2.csv > /dev/null 2>&1";
            if (std::system(cmd1.c_str()) == 0 && std::system(cmd2.c_str()) == 0) {
                auto slurp = [](const std::string& p) {
                    std::ifstream in(p, std::ios::binary);
                    std::ostringstream ss;
                    ss << in.rdbuf();
                    return ss.str();
                };
                const std::string b1 = slurp(base + "1.csv"), b2 = slurp(base + "2.csv");
                pass = pass && !b1.empty() && b1 == b2;
                cli_note += ", CLI rerun byte-identical";
            } else {
                pass = false;
                cli_note = "CLI invocation failed";
            }
        }
        report(13, pass, cli_note, now_seconds() - t0);
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
