#ifndef BERGMAN_EXPERIMENTS_HPP
#define BERGMAN_EXPERIMENTS_HPP

#include <string>

#include "bergman/families.hpp"
#include "bergman/fit.hpp"
#include "bergman/norms.hpp"

namespace bergman {

struct SweepRow {
    double param = 0.0;    // s, p, or the suite-function index
    double lambda = 0.0;
    double measure = 0.0;  // superlevel measure at lambda
    double norm_pow = 0.0; // ||f||_p^q entering the ratio
    double ratio = 0.0;    // lambda^q * measure / norm_pow
    bool valid = true;
    std::string note;
};

struct SweepResult {
    std::string name;
    std::string x_label;
    std::vector<SweepRow> rows;
    FitResult fit;
    double suite_max = 0.0;
};

// Thm 3.1: lambda = 16^-1 (1-s)^-2, ratio = lambda mu / ||f_s||_1, fitted
// against log(1/(1-s)).
SweepResult weak11_failure_sweep(const std::vector<double>& s_list);

// Thm 4.1: p = 4/3 + lambda^{-9/10}; log-log fit of the weak-(4/3,4/3) ratio.
SweepResult weak43_failure_sweep(const std::vector<double>& lambda_list);

// Thm 4.2: weak-(4,4) ratio over a 5-function suite in L^4(H); rows carry the
// function label, fit is of the per-lambda suite max.
SweepResult weak44_bound_check(const std::vector<double>& lambda_grid);

// Remark 4.10: p = 4/3 + exp(-lambda^{9/10}) through the log-domain E1 path.
SweepResult orlicz_weight_failure_sweep(const std::vector<double>& lambda_list);

// Thms 4.6/4.7: weighted weak-(4/3,4/3) ratios for the fixed-p test set; with
// log_weight and eps = 1/3 and remark410_coupling the sweep must blow up.
SweepResult weighted_weak_check(double eps, bool log_weight,
                                const std::vector<double>& lambda_grid,
                                bool remark410_coupling = false);

// Thm 3.5: weak L log+ L ratio on the f_s family under the lambda(s)
// coupling.
SweepResult polydisc_orlicz_weak_check(const std::vector<double>& s_list);

// Thm 3.6: || P f ||_{L(log+L)^k} / || f ||_{L(log+L)^{k+1}} over the
// 5-function suite on the disc.
SweepResult polydisc_orlicz_mapping_check(int k);

// g(z1,z2) = z2 f(z1 z2, z2); isometry L^4(H) -> L^4(D^2, |z2|^-2 dV).
FunctionHandle transport_to_bidisc(const FunctionHandle& f_on_hartogs);

enum class ForelliRudinKind { AreaIntegral, CircleIntegral };

struct ForelliRudinResult {
    double value = 0.0;
    std::string regime;        // "bounded", "log", "power"
    double comparability = 0.0; // value / predicted profile
    bool converged = true;
};

ForelliRudinResult forelli_rudin(double eps, double delta, Complex w, ForelliRudinKind kind);

// L^4(H) norm^4 and superlevel measures of the weak-(4,4) suite helpers
// (quadrature-derived; exposed for tests).
double fp_l4_norm_pow(double p);
double hartogs_mass_near_one(double c);      // |{ z in H : |1 - z2| < c }|
double hartogs_norm4_inv_one_minus_z2(double beta); // int_H |1-z2|^{-4 beta} dV

} // namespace bergman

#endif
