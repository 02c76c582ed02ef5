#ifndef BERGMAN_SAMPLING_HPP
#define BERGMAN_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "bergman/domain.hpp"

namespace bergman {

struct SampleCloud {
    DomainSpec domain;
    std::uint64_t seed = 0;
    std::vector<CPoint> points;
    std::size_t count() const { return points.size(); }
};

// Uniform (Lebesgue) samples, deterministic per seed and independent of the
// thread count: points are generated in fixed blocks, each with its own
// derived stream.
SampleCloud sample(const DomainSpec& domain, std::size_t count, std::uint64_t seed);

// Fraction of samples satisfying a predicate, with the binomial standard
// error; used by the Monte Carlo distribution estimator.
struct CountResult {
    double fraction = 0.0;
    double std_error = 0.0;
};

template <class Pred>
CountResult count_fraction(const SampleCloud& cloud, Pred&& pred) {
    std::size_t hits = 0;
    for (const auto& p : cloud.points) hits += pred(p) ? 1 : 0;
    CountResult r;
    const double n = static_cast<double>(cloud.count());
    r.fraction = static_cast<double>(hits) / n;
    r.std_error = std::sqrt(std::max(r.fraction * (1.0 - r.fraction), 1.0 / n) / n);
    return r;
}

} // namespace bergman

#endif
