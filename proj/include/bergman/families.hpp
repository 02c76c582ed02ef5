#ifndef BERGMAN_FAMILIES_HPP
#define BERGMAN_FAMILIES_HPP

#include "bergman/functions.hpp"

namespace bergman {

enum class FamilyKind { FsBidisc, FpHartogs, FpLogHartogs };
enum class Coupling { None, LambdaFromS, PFromLambdaPower, PFromLambdaExp };

// lambda(s) = 16^-1 (1-s)^-2
double lambda_from_s(double s);
// p(lambda) = 4/3 + lambda^{-9/10}
double p_from_lambda_power(double lambda);
// p(lambda) = 4/3 + exp(-lambda^{9/10}); returned through log(3p-4) because
// the increment underflows long before the sweep reaches its asymptotic range
double log_3pm4_from_lambda_exp(double lambda);

struct CounterexampleFamily {
    FamilyKind kind = FamilyKind::FsBidisc;
    double param = 0.5;    // s for FsBidisc, p for the Hartogs families
    double log_3pm4 = 0.0; // exact log(3p-4); authoritative for exp-coupled rows

    DomainSpec domain() const;
};

CounterexampleFamily fs_family(double s);
CounterexampleFamily fp_family(double p);
CounterexampleFamily fp_log_family(double p);
CounterexampleFamily fp_log_family_from_log(double log_3pm4);

Complex family_eval(const CounterexampleFamily& fam, const CPoint& w);

// Full handle with the structure metadata (product factors, polar mode,
// radial modulus, q-profile) that the projector and norms exploit.
FunctionHandle family_handle(const CounterexampleFamily& fam);

// The analytic projection: exact for f_s; c/z2 for the Hartogs families with
// c fixed by the radial quadrature oracle at construction.
Complex closed_form_projection(const CounterexampleFamily& fam, const CPoint& z);

// Modulus handle of the projection (for distribution machinery).
FunctionHandle projection_modulus_handle(const CounterexampleFamily& fam);

// c such that P(f) = c / z2 (Hartogs families): quadrature-derived.
double projection_constant(const CounterexampleFamily& fam);
// The printed constant (p-1)/(3p-4); kept for the recorded discrepancy, not
// used as ground truth.
double paper_projection_constant(const CounterexampleFamily& fam);

// ||f_p||_{4/3}^{4/3} (FpHartogs, unweighted) or the (-log|z2|+1)^{1/3}-
// weighted analogue (FpLogHartogs), by delta-aware radial quadrature; the
// E1 closed form takes over where the exponent is below double resolution.
double family_norm_pow43(const CounterexampleFamily& fam);
// Same through the E1 formula only (cross-check path).
double family_norm_pow43_e1(const CounterexampleFamily& fam);

// ||f_s||_{L^1(D^2)} by lens-layer quadrature.
double fs_l1_norm(double s);

} // namespace bergman

#endif
