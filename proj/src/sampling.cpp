#include "bergman/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/rng.hpp"

namespace bergman {

namespace {

constexpr std::size_t kBlock = 4096;

Complex draw_disc(SplitMix64& rng) {
    // r = sqrt(U) is the inverse CDF for the r dr density
    double r = std::sqrt(rng.next_double());
    double th = 2.0 * M_PI * rng.next_double();
    return std::polar(r, th);
}

CPoint draw_point(const DomainSpec& domain, SplitMix64& rng) {
    switch (domain.kind) {
        case DomainKind::UnitDisc:
            return CPoint(draw_disc(rng));
        case DomainKind::PuncturedDisc: {
            Complex z = draw_disc(rng);
            while (std::abs(z) == 0.0) z = draw_disc(rng);
            return CPoint(z);
        }
        case DomainKind::Polydisc: {
            CPoint p;
            p.coords.resize(domain.dimension);
            for (int j = 0; j < domain.dimension; ++j) p.coords[j] = draw_disc(rng);
            return p;
        }
        case DomainKind::HartogsTriangle: {
            // density |v|^2 dV(u) dV(v) on D^2: radial CDF of v is r^4
            Complex u = draw_disc(rng);
            double rv = std::pow(rng.next_double(), 0.25);
            while (rv == 0.0) rv = std::pow(rng.next_double(), 0.25);
            Complex v = std::polar(rv, 2.0 * M_PI * rng.next_double());
            return CPoint(u * v, v);
        }
    }
    throw std::logic_error("draw_point: unhandled domain");
}

} // namespace

SampleCloud sample(const DomainSpec& domain, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
    SampleCloud cloud;
    cloud.domain = domain;
    cloud.seed = seed;
    cloud.points.resize(count);
    const std::size_t blocks = (count + kBlock - 1) / kBlock;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
        SplitMix64 rng = block_stream(seed, static_cast<std::uint64_t>(b));
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, count);
        for (std::size_t i = lo; i < hi; ++i) cloud.points[i] = draw_point(domain, rng);
    }
    return cloud;
}

} // namespace bergman
