#ifndef BERGMAN_NORMS_HPP
#define BERGMAN_NORMS_HPP

#include <cstdint>
#include <optional>

#include "bergman/functions.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

struct NormResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

enum class EstimatorKind { Quadrature, MonteCarlo, Analytic };

struct EstimatorSpec {
    EstimatorKind kind = EstimatorKind::Quadrature;
    std::uint64_t seed = 0x5EED;
    std::size_t count = 1000000;
    int radial_order = 48;
    int angular_order = 48;

    static EstimatorSpec analytic() { return {EstimatorKind::Analytic}; }
    static EstimatorSpec monte_carlo(std::uint64_t seed = 0x5EED, std::size_t count = 1000000) {
        EstimatorSpec e;
        e.kind = EstimatorKind::MonteCarlo;
        e.seed = seed;
        e.count = count;
        return e;
    }
};

// Sampled superlevel-set measure t -> |{ |f| > t }|.
struct DistributionCurve {
    struct Sample {
        double t;
        double measure;
        double error;
    };
    std::vector<Sample> samples;
    EstimatorKind estimator = EstimatorKind::Quadrature;

    double at(double t) const; // interpolated lookup (log-log)
};

struct OrliczSpec {
    double p = 1.0;
    int k = 0;
};

// Positive, locally integrable weight. The constructor-style factory checks
// integrability by quadrature and throws if the mass diverges under
// refinement.
struct WeightSpec {
    std::function<double(const CPoint&)> eval;
    std::string label;
    // set when the weight depends only on |z_coord|
    std::optional<FunctionHandle::RadialModulus> radial;
};

WeightSpec make_weight(const DomainSpec& domain, std::function<double(const CPoint&)> eval,
                       std::string label,
                       std::optional<FunctionHandle::RadialModulus> radial = std::nullopt);

// (int |f|^p weight dV)^{1/p}. Fast paths: q-profile functions integrate over
// lens layers, radial-modulus functions over a 1-D log-substitution grid (the
// only way to resolve r^{delta-1} tails for delta near 0).
NormResult lp_norm(const FunctionHandle& f, const DomainSpec& domain, double p,
                   const std::optional<WeightSpec>& weight, const QuadratureRule& rule);

DistributionCurve distribution(const FunctionHandle& f, const DomainSpec& domain,
                               const std::vector<double>& t_grid, const EstimatorSpec& est);

// Exact superlevel measure for functions carrying analytic structure
// (constant, radial modulus, q-profile); throws if none applies.
double analytic_superlevel_measure(const FunctionHandle& f, const DomainSpec& domain, double t);

struct WeakQuasinorm {
    double value = 0.0;
    double lambda_at_max = 0.0;
    bool at_edge = false;
};

// sup over the grid of lambda * mu{|f| > lambda}^{1/p}; flagged when the
// sup sits on the grid edge.
WeakQuasinorm weak_lp_quasinorm(const FunctionHandle& f, const DomainSpec& domain, double p,
                                const std::vector<double>& lambda_grid,
                                const EstimatorSpec& est = {});

// Luxemburg-style norm: the lambda solving
//   Phi(lambda) = int |f/lambda|^p (log+ |f/lambda|)^k dV = 1,
// by bracketing and bisection. Returns the flagged bracket edge when the
// root does not exist (degenerate small functions).
NormResult orlicz_norm(const FunctionHandle& f, const DomainSpec& domain, const OrliczSpec& spec,
                       double tol, const QuadratureRule& rule);

// ||f|| = int_0^inf mu{|f| > t}^{1/p} dt with a power-law tail fit on the
// last decade of the curve; flagged when the fitted tail diverges.
NormResult lorentz_p1_norm(const FunctionHandle& f, const DomainSpec& domain, double p,
                           const EstimatorSpec& est = {});

// lambda^q * mu{|image| > lambda} / input_norm^q : the constant that must
// stay bounded for weak-type (p,q).
double weak_type_ratio(const FunctionHandle& image, const DomainSpec& domain_out, double input_norm,
                       double p, double q, double lambda, const EstimatorSpec& est = {});

} // namespace bergman

#endif
