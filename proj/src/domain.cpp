#include "bergman/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

bool CPoint::finite() const {
    for (const auto& z : coords)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

std::string DomainSpec::name() const {
    switch (kind) {
        case DomainKind::UnitDisc: return "disc";
        case DomainKind::Polydisc: return dimension == 2 ? "bidisc" : "polydisc" + std::to_string(dimension);
        case DomainKind::PuncturedDisc: return "punctured-disc";
        case DomainKind::HartogsTriangle: return "hartogs";
    }
    return "?";
}

DomainSpec parse_domain(const std::string& name) {
    if (name == "disc") return DomainSpec::unit_disc();
    if (name == "bidisc" || name == "polydisc2") return DomainSpec::polydisc(2);
    if (name == "polydisc3") return DomainSpec::polydisc(3);
    if (name == "punctured-disc") return DomainSpec::punctured_disc();
    if (name == "hartogs") return DomainSpec::hartogs();
    throw std::invalid_argument("unknown domain: " + name);
}

bool contains(const DomainSpec& domain, const CPoint& z) {
    if (z.dim() != domain.dimension)
        throw std::invalid_argument("contains: point dimension " + std::to_string(z.dim()) +
                                    " does not match domain dimension " +
                                    std::to_string(domain.dimension));
    switch (domain.kind) {
        case DomainKind::UnitDisc:
            return std::abs(z[0]) < 1.0;
        case DomainKind::Polydisc:
            for (int j = 0; j < domain.dimension; ++j)
                if (!(std::abs(z[j]) < 1.0)) return false;
            return true;
        case DomainKind::PuncturedDisc:
            return std::abs(z[0]) > 0.0 && std::abs(z[0]) < 1.0;
        case DomainKind::HartogsTriangle:
            return std::abs(z[0]) < std::abs(z[1]) && std::abs(z[1]) < 1.0;
    }
    return false;
}

double volume(const DomainSpec& domain) {
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            return M_PI;
        case DomainKind::Polydisc:
            return std::pow(M_PI, domain.dimension);
        case DomainKind::HartogsTriangle:
            // int_D pi |z2|^2 dV(z2) = pi * 2pi/4
            return M_PI * M_PI / 2.0;
    }
    return 0.0;
}

double radial_sublevel_measure(const DomainSpec& domain, int coord, double c) {
    if (c <= 0.0) return 0.0;
    if (c > 1.0) c = 1.0;
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            return M_PI * c * c;
        case DomainKind::Polydisc:
            return std::pow(M_PI, domain.dimension) * c * c;
        case DomainKind::HartogsTriangle:
            if (coord == 1) return M_PI * M_PI * c * c * c * c / 2.0;
            break;
        default:
            break;
    }
    throw std::invalid_argument("radial_sublevel_measure: no closed form for this domain/coordinate");
}

} // namespace bergman
