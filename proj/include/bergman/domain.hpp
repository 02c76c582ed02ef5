#ifndef BERGMAN_DOMAIN_HPP
#define BERGMAN_DOMAIN_HPP

#include <complex>
#include <string>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

// Point in C^n, n in {1,2} in practice.
struct CPoint {
    std::vector<Complex> coords;

    CPoint() = default;
    explicit CPoint(Complex z) : coords{z} {}
    CPoint(Complex z1, Complex z2) : coords{z1, z2} {}

    int dim() const { return static_cast<int>(coords.size()); }
    Complex operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    bool finite() const;
};

enum class DomainKind { UnitDisc, Polydisc, PuncturedDisc, HartogsTriangle };

// One of the model domains. All of them are Reinhardt: membership depends
// only on the coordinate moduli.
struct DomainSpec {
    DomainKind kind;
    int dimension;

    static DomainSpec unit_disc() { return {DomainKind::UnitDisc, 1}; }
    static DomainSpec polydisc(int n) { return {DomainKind::Polydisc, n}; }
    static DomainSpec punctured_disc() { return {DomainKind::PuncturedDisc, 1}; }
    static DomainSpec hartogs() { return {DomainKind::HartogsTriangle, 2}; }

    bool operator==(const DomainSpec& o) const {
        return kind == o.kind && dimension == o.dimension;
    }
    std::string name() const;
};

DomainSpec parse_domain(const std::string& name);

// Strict membership. Throws std::invalid_argument on dimension mismatch.
bool contains(const DomainSpec& domain, const CPoint& z);

// Lebesgue volume (real 2n-dimensional measure).
double volume(const DomainSpec& domain);

// Measure of {z in domain : |z_coord| < c} for the radial slabs used by
// analytic distribution estimators. Throws when no closed form is wired up.
double radial_sublevel_measure(const DomainSpec& domain, int coord, double c);

} // namespace bergman

#endif
