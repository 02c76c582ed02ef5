#include "bergman/monomials.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bergman {

bool admissible(const DomainSpec& domain, MonomialIndex idx) {
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            return idx.a >= 0 && idx.b == 0;
        case DomainKind::Polydisc:
            return idx.a >= 0 && idx.b >= 0;
        case DomainKind::HartogsTriangle:
            return idx.a >= 0 && idx.a + idx.b >= -1;
    }
    return false;
}

int total_degree(MonomialIndex idx, const DomainSpec& domain) {
    if (domain.dimension == 1) return idx.a;
    return std::abs(idx.a) + std::abs(idx.b);
}

double monomial_norm_sq(const DomainSpec& domain, MonomialIndex idx) {
    if (!admissible(domain, idx))
        throw std::invalid_argument("monomial_norm_sq: index not admissible for this domain");
    const double pi = M_PI;
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            return pi / (idx.a + 1.0);
        case DomainKind::Polydisc:
            if (domain.dimension != 2)
                throw std::invalid_argument("monomial_norm_sq: only n <= 2 supported");
            return pi * pi / ((idx.a + 1.0) * (idx.b + 1.0));
        case DomainKind::HartogsTriangle:
            return pi * pi / ((idx.a + 1.0) * (idx.a + idx.b + 2.0));
    }
    throw std::logic_error("monomial_norm_sq: unhandled domain");
}

std::vector<MonomialIndex> admissible_indices(const DomainSpec& domain, int truncation) {
    std::vector<MonomialIndex> out;
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            for (int a = 0; a <= truncation; ++a) out.push_back({a, 0});
            break;
        case DomainKind::Polydisc:
            for (int a = 0; a <= truncation; ++a)
                for (int b = 0; a + b <= truncation; ++b) out.push_back({a, b});
            break;
        case DomainKind::HartogsTriangle:
            for (int a = 0; a <= truncation; ++a)
                for (int b = -std::min(a + 1, truncation - a); a + std::abs(b) <= truncation; ++b)
                    out.push_back({a, b});
            break;
    }
    return out;
}

} // namespace bergman
