// Command-line front end: configures and runs the experiments, writes one
// result file per run plus a manifest with the config echo and timings.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif
#include <nlohmann/json.hpp>

#include "bergman/expint.hpp"
#include "bergman/experiments.hpp"
#include "bergman/io.hpp"
#include "bergman/kernels.hpp"
#include "bergman/projector.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0x5EED;
    std::size_t mc_count = 1000000;
    int radial_order = 48;
    int angular_order = 48;

    std::string domain = "disc";
    std::string family = "fs";
    double s = 0.5;
    double p = 2.0;
    double eps = 0.5;
    bool log_weight = false;
    bool coupled = false;
    int truncation = 64;
    int k = 0;
    int j = 1;
    double alpha = -2.0;
    double x = 1.0;
    double delta = 0.0;
    double fr_eps = 0.0;
    std::string fr_kind = "area";
    std::string estimator = "analytic";
    std::vector<double> s_list;
    std::vector<double> t_list;
    double lambda_lo = 1e2, lambda_hi = 1e6;
    int lambda_n = 17;
    std::string z = "0", w = "0";
    double p_norm = 2.0;

    std::string echo; // canonical config echo, hashed into every output
};

Complex parse_complex(const std::string& text) {
    double re = 0.0, im = 0.0;
    char comma = 0;
    std::istringstream is(text);
    is >> re;
    if (is >> comma && comma == ',') is >> im;
    return {re, im};
}

std::vector<double> lambda_grid(const RunConfig& cfg) {
    std::vector<double> out;
    for (int i = 0; i < cfg.lambda_n; ++i)
        out.push_back(cfg.lambda_lo *
                      std::pow(cfg.lambda_hi / cfg.lambda_lo,
                               static_cast<double>(i) / (cfg.lambda_n - 1)));
    return out;
}

std::string config_hash_hex(const RunConfig& cfg) {
    std::ostringstream os;
    os << std::hex << fnv1a_hash(cfg.echo);
    return os.str();
}

void write_outputs(const RunConfig& cfg, const SweepResult& sweep, double seconds) {
    const std::string hash = config_hash_hex(cfg);
    const std::string body =
        cfg.format == "json" ? sweep_to_json(sweep, hash) : sweep_to_csv(sweep, hash);
    if (cfg.out_path.empty()) {
        std::cout << body;
    } else {
        write_file(cfg.out_path, body);
        nlohmann::json manifest;
        manifest["config"] = cfg.echo;
        manifest["config_hash"] = hash;
        manifest["version"] = kVersion;
        manifest["seconds"] = seconds;
        write_file(cfg.out_path + ".manifest.json", manifest.dump(2));
        std::cout << "wrote " << cfg.out_path << " (config " << hash << ")\n";
    }
    bool any_flagged = false;
    for (const auto& r : sweep.rows) any_flagged |= !r.valid;
    if (any_flagged) std::cerr << "warning: some rows flagged as unconverged/invalid\n";
}

CounterexampleFamily family_from(const RunConfig& cfg) {
    if (cfg.family == "fs") return fs_family(cfg.s);
    if (cfg.family == "fp") return fp_family(cfg.p);
    if (cfg.family == "fp-log") return fp_log_family(cfg.p);
    throw CLI::ValidationError("--family", "unknown family " + cfg.family);
}

} // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("BERGMAN_THREADS")) {
#ifdef _OPENMP
        omp_set_num_threads(std::max(1, std::atoi(threads)));
#endif
        (void)threads;
    }

    CLI::App app{"Bergman projection weak-type experiments"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "key=value config file for sweep batteries");
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--out", cfg.out_path, "result file path (stdout when omitted)");
    app.add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", cfg.seed, "Monte Carlo seed");
    app.add_option("--mc-count", cfg.mc_count, "Monte Carlo sample count");
    app.add_option("--radial-order", cfg.radial_order, "quadrature radial order");
    app.add_option("--angular-order", cfg.angular_order, "quadrature angular order");

    auto* kernel = app.add_subcommand("kernel", "kernel evaluation");
    auto* kernel_eval = kernel->add_subcommand("eval", "evaluate the Bergman kernel");
    kernel_eval->add_option("--domain", cfg.domain, "disc|bidisc|hartogs");
    kernel_eval->add_option("--z", cfg.z, "point, 're,im' per coordinate separated by ';'");
    kernel_eval->add_option("--w", cfg.w, "point");

    auto* project = app.add_subcommand("project", "series-project a family member");
    project->add_option("--family", cfg.family, "fs|fp|fp-log");
    project->add_option("--s", cfg.s, "f_s parameter");
    project->add_option("--p", cfg.p, "f_p parameter");
    project->add_option("--truncation", cfg.truncation, "max total degree");

    auto* norm = app.add_subcommand("norm", "L^p norm of a family member");
    norm->add_option("--family", cfg.family, "fs|fp|fp-log");
    norm->add_option("--s", cfg.s, "f_s parameter");
    norm->add_option("--p", cfg.p, "f_p parameter");
    norm->add_option("--p-norm", cfg.p_norm, "norm exponent");

    auto* dist = app.add_subcommand("distribution", "superlevel measure curve");
    dist->add_option("--family", cfg.family, "fs|fp|fp-log");
    dist->add_option("--s", cfg.s, "f_s parameter");
    dist->add_option("--p", cfg.p, "f_p parameter");
    dist->add_option("--t", cfg.t_list, "t grid")->delimiter(',');
    dist->add_option("--estimator", cfg.estimator, "analytic|quadrature|montecarlo");

    auto* bb = app.add_subcommand("bb-constant", "Bekolle-Bonami constant");
    bb->add_option("--weight", cfg.family, "power|iterated-log");
    bb->add_option("--eps", cfg.eps, "power weight: |w|^{2/3-eps}");
    bb->add_option("--j", cfg.j, "iterated-log depth");
    bb->add_option("--alpha", cfg.alpha, "iterated-log exponent (< -1)");

    auto* fr = app.add_subcommand("forelli-rudin", "Forelli-Rudin model integral");
    fr->add_option("--eps", cfg.fr_eps, "eps < 1");
    fr->add_option("--delta", cfg.delta, "regime parameter");
    fr->add_option("--w", cfg.w, "point in the disc");
    fr->add_option("--kind", cfg.fr_kind, "area|circle")->check(CLI::IsMember({"area", "circle"}));

    auto* e1cmd = app.add_subcommand("e1", "exponential integral E1");
    e1cmd->add_option("--x", cfg.x, "argument > 0");

    auto* sweep = app.add_subcommand("sweep", "weak-type sweeps");
    sweep->require_subcommand(1);
    auto* w11 = sweep->add_subcommand("weak11", "bidisc weak-(1,1) failure");
    w11->add_option("--s", cfg.s_list, "s grid, comma separated")->delimiter(',');
    auto* w43 = sweep->add_subcommand("weak43", "Hartogs weak-(4/3,4/3) failure");
    auto* w44 = sweep->add_subcommand("weak44", "Hartogs weak-(4,4) bound");
    auto* wweighted = sweep->add_subcommand("weighted", "weighted weak-(4/3,4/3) checks");
    wweighted->add_option("--eps", cfg.eps, "weight exponent");
    wweighted->add_flag("--log-weight", cfg.log_weight, "(-log|z2|+1)^eps instead of |z2|^-eps");
    wweighted->add_flag("--coupled", cfg.coupled, "run the coupled failure example");
    auto* worlicz = sweep->add_subcommand("orlicz-polydisc", "L log L checks on the bidisc");
    worlicz->add_option("--k", cfg.k, "mapping check exponent");
    worlicz->add_option("--s", cfg.s_list, "s grid for the weak check")->delimiter(',');
    for (auto* sc : {w43, w44, wweighted, worlicz}) {
        sc->add_option("--lambda-lo", cfg.lambda_lo, "lambda grid start");
        sc->add_option("--lambda-hi", cfg.lambda_hi, "lambda grid end");
        sc->add_option("--lambda-n", cfg.lambda_n, "lambda grid size");
    }
    w11->add_option("--lambda-n", cfg.lambda_n, "(unused; accepted for config uniformity)");

    auto* transport = app.add_subcommand("transport-check", "H <-> D^2 transport isometry");
    transport->add_option("--p", cfg.p, "f_p parameter (> 2 for the L^4 check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // canonical config echo for hashing: subcommand plus every option value
    {
        std::ostringstream os;
        for (CLI::App* sub = &app; sub;) {
            CLI::App* next = nullptr;
            for (auto* s : sub->get_subcommands()) {
                os << s->get_name() << " ";
                next = s;
            }
            sub = next;
        }
        os << "seed=" << cfg.seed << " mc=" << cfg.mc_count << " R=" << cfg.radial_order
           << " A=" << cfg.angular_order << " domain=" << cfg.domain << " family=" << cfg.family
           << " s=" << format_double(cfg.s) << " p=" << format_double(cfg.p)
           << " eps=" << format_double(cfg.eps) << " logw=" << cfg.log_weight
           << " coupled=" << cfg.coupled << " trunc=" << cfg.truncation << " k=" << cfg.k
           << " j=" << cfg.j << " alpha=" << format_double(cfg.alpha)
           << " x=" << format_double(cfg.x) << " delta=" << format_double(cfg.delta)
           << " freps=" << format_double(cfg.fr_eps) << " frkind=" << cfg.fr_kind
           << " est=" << cfg.estimator << " z=" << cfg.z << " w=" << cfg.w
           << " pnorm=" << format_double(cfg.p_norm) << " llo=" << format_double(cfg.lambda_lo)
           << " lhi=" << format_double(cfg.lambda_hi) << " ln=" << cfg.lambda_n << " s_list=";
        for (double v : cfg.s_list) os << format_double(v) << ",";
        os << " t_list=";
        for (double v : cfg.t_list) os << format_double(v) << ",";
        cfg.echo = os.str();
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    try {
        if (kernel_eval->parsed()) {
            const DomainSpec dom = parse_domain(cfg.domain);
            CPoint z, w;
            std::istringstream zs(cfg.z), ws(cfg.w);
            std::string part;
            while (std::getline(zs, part, ';')) z.coords.push_back(parse_complex(part));
            while (std::getline(ws, part, ';')) w.coords.push_back(parse_complex(part));
            const Complex k = bergman::kernel(dom, z, w);
            std::cout << format_double(k.real()) << (k.imag() < 0 ? " - " : " + ")
                      << format_double(std::abs(k.imag())) << "i\n";
            return 0;
        }
        if (e1cmd->parsed()) {
            std::cout << format_double(exp_integral_E1(cfg.x)) << "\n";
            return 0;
        }
        if (fr->parsed()) {
            ForelliRudinResult r = forelli_rudin(
                cfg.fr_eps, cfg.delta, parse_complex(cfg.w),
                cfg.fr_kind == "area" ? ForelliRudinKind::AreaIntegral
                                      : ForelliRudinKind::CircleIntegral);
            std::cout << "value=" << format_double(r.value) << " regime=" << r.regime
                      << " comparability=" << format_double(r.comparability)
                      << (r.converged ? "" : " (unconverged)") << "\n";
            return r.converged ? 0 : 3;
        }
        if (project->parsed()) {
            CounterexampleFamily fam = family_from(cfg);
            const DomainSpec dom = fam.domain();
            QuadratureRule rule = quadrature_rule(
                dom, cfg.radial_order, std::max(cfg.angular_order, cfg.truncation),
                fam.kind == FamilyKind::FsBidisc ? std::optional<double>(cfg.s) : std::nullopt);
            SpectralCoefficients coeffs = project_series(dom, family_handle(fam), cfg.truncation,
                                                         rule);
            const std::string hash = config_hash_hex(cfg);
            nlohmann::json j = nlohmann::json::parse(to_json(coeffs));
            j["config_hash"] = hash;
            if (cfg.out_path.empty())
                std::cout << j.dump(2) << "\n";
            else {
                write_file(cfg.out_path, j.dump(2));
                std::cout << "wrote " << cfg.out_path << "\n";
            }
            return 0;
        }
        if (norm->parsed()) {
            CounterexampleFamily fam = family_from(cfg);
            const DomainSpec dom = fam.domain();
            QuadratureRule rule = quadrature_rule(
                dom, cfg.radial_order, cfg.angular_order,
                fam.kind == FamilyKind::FsBidisc ? std::optional<double>(cfg.s) : std::nullopt);
            NormResult n = lp_norm(family_handle(fam), dom, cfg.p_norm, std::nullopt, rule);
            std::cout << format_double(n.value) << " (error est "
                      << format_double(n.error) << (n.converged ? ")" : ", unconverged)") << "\n";
            return n.converged ? 0 : 3;
        }
        if (dist->parsed()) {
            CounterexampleFamily fam = family_from(cfg);
            EstimatorSpec est;
            if (cfg.estimator == "analytic")
                est = EstimatorSpec::analytic();
            else if (cfg.estimator == "montecarlo")
                est = EstimatorSpec::monte_carlo(cfg.seed, cfg.mc_count);
            else
                est = EstimatorSpec{EstimatorKind::Quadrature, cfg.seed, cfg.mc_count,
                                    cfg.radial_order, cfg.angular_order};
            if (cfg.t_list.empty()) throw CLI::ValidationError("--t", "t grid required");
            DistributionCurve curve =
                distribution(projection_modulus_handle(fam), fam.domain(), cfg.t_list, est);
            const std::string hash = config_hash_hex(cfg);
            const std::string body =
                cfg.format == "json" ? curve_to_json(curve, hash) : curve_to_csv(curve, hash);
            if (cfg.out_path.empty())
                std::cout << body;
            else {
                write_file(cfg.out_path, body);
                std::cout << "wrote " << cfg.out_path << "\n";
            }
            return 0;
        }
        if (bb->parsed()) {
            BBResult r;
            std::string label;
            if (cfg.family == "iterated-log") {
                r = bb_constant_iterated(cfg.j, cfg.alpha, default_center_grid());
                label = "f_{alpha,j}^{-1/3}";
            } else {
                const double e = 2.0 / 3.0 - cfg.eps;
                WeightSpec mu = make_weight(
                    DomainSpec::unit_disc(),
                    [e](const CPoint& z) { return std::pow(std::abs(z[0]), e); },
                    "|w|^{2/3-eps}",
                    FunctionHandle::RadialModulus{0, [e](double rr) { return std::pow(rr, e); }, [e](double t) { return -e * t; }});
                r = bb_constant(mu, 4.0 / 3.0, default_center_grid());
                label = mu.label;
            }
            if (r.divergent) {
                std::cout << "B_{4/3}(" << label << ") = infinite (sentinel at center "
                          << format_double(r.divergent_center.real()) << ","
                          << format_double(r.divergent_center.imag()) << ")\n";
                return 0;
            }
            std::cout << "B_{4/3}(" << label << ") = " << format_double(r.value) << " at center "
                      << format_double(r.argmax_center.real()) << ","
                      << format_double(r.argmax_center.imag()) << "\n";
            return 0;
        }
        if (transport->parsed()) {
            FunctionHandle f = family_handle(fp_family(cfg.p));
            FunctionHandle g = transport_to_bidisc(f);
            const auto H = DomainSpec::hartogs();
            const auto D2 = DomainSpec::polydisc(2);
            QuadratureRule hrule = quadrature_rule(H, cfg.radial_order, cfg.angular_order);
            QuadratureRule drule = quadrature_rule(D2, cfg.radial_order, cfg.angular_order);
            WeightSpec w2m2 = make_weight(
                D2, [](const CPoint& z) { return std::pow(std::abs(z[1]), -2.0); }, "|z2|^-2",
                FunctionHandle::RadialModulus{1, [](double rr) { return std::pow(rr, -2.0); }, [](double t) { return 2.0 * t; }});
            const double lhs = lp_norm(g, D2, 4.0, w2m2, drule).value;
            const double rhs = lp_norm(f, H, 4.0, std::nullopt, hrule).value;
            std::cout << "||g||_{L4(D^2,|z2|^-2)} = " << format_double(lhs)
                      << "  ||f||_{L4(H)} = " << format_double(rhs)
                      << "  rel diff = " << format_double(std::abs(lhs - rhs) / rhs) << "\n";
            return std::abs(lhs - rhs) / rhs < 1e-5 ? 0 : 3;
        }

        // sweeps
        SweepResult result;
        if (w11->parsed()) {
            std::vector<double> s_list = cfg.s_list;
            if (s_list.empty())
                for (int m = 3; m <= 10; ++m) s_list.push_back(1.0 - std::pow(2.0, -m));
            result = weak11_failure_sweep(s_list);
        } else if (w43->parsed()) {
            result = weak43_failure_sweep(lambda_grid(cfg));
        } else if (w44->parsed()) {
            if (cfg.lambda_lo == 1e2 && cfg.lambda_hi == 1e6) {
                cfg.lambda_lo = 1.0;
                cfg.lambda_hi = 1e3;
            }
            result = weak44_bound_check(lambda_grid(cfg));
        } else if (wweighted->parsed()) {
            if (cfg.coupled) {
                if (cfg.lambda_lo == 1e2 && cfg.lambda_hi == 1e6) {
                    cfg.lambda_lo = 1e4;
                    cfg.lambda_hi = 1e9;
                }
                result = weighted_weak_check(cfg.eps, cfg.log_weight, lambda_grid(cfg), true);
            } else {
                if (cfg.lambda_lo == 1e2 && cfg.lambda_hi == 1e6) {
                    cfg.lambda_lo = 1.0;
                    cfg.lambda_hi = 1e3;
                }
                result = weighted_weak_check(cfg.eps, cfg.log_weight, lambda_grid(cfg), false);
            }
        } else if (worlicz->parsed()) {
            if (!cfg.s_list.empty()) {
                result = polydisc_orlicz_weak_check(cfg.s_list);
            } else if (worlicz->count("--k") > 0) {
                result = polydisc_orlicz_mapping_check(cfg.k);
            } else {
                std::vector<double> s_list;
                for (int m = 3; m <= 9; ++m) s_list.push_back(1.0 - std::pow(2.0, -m));
                result = polydisc_orlicz_weak_check(s_list);
            }
        } else {
            std::cerr << "no runnable subcommand\n";
            return 2;
        }
        write_outputs(cfg, result, elapsed());
        return 0;
    } catch (const CLI::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
