#include "bergman/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

void require_interior(const DomainSpec& domain, const CPoint& z, const char* who) {
    if (!contains(domain, z))
        throw std::invalid_argument(std::string(who) + ": point not in the open domain");
}

} // namespace

Complex kernel_disc(Complex z, Complex w) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
        throw std::invalid_argument("kernel_disc: arguments must lie in the open unit disc");
    Complex d = 1.0 - z * std::conj(w);
    return 1.0 / (M_PI * d * d);
}

Complex kernel_polydisc(const CPoint& z, const CPoint& w) {
    if (z.dim() != w.dim()) throw std::invalid_argument("kernel_polydisc: dimension mismatch");
    Complex k = 1.0;
    for (int j = 0; j < z.dim(); ++j) k *= kernel_disc(z[j], w[j]);
    return k;
}

Complex kernel_hartogs(const CPoint& z, const CPoint& w) {
    const DomainSpec h = DomainSpec::hartogs();
    require_interior(h, z, "kernel_hartogs");
    require_interior(h, w, "kernel_hartogs");
    const Complex s = z[1] * std::conj(w[1]);
    const Complex t = z[0] * std::conj(w[0]);
    const Complex a = s - t;
    const Complex b = 1.0 - s;
    return s / (M_PI * M_PI * a * a * b * b);
}

Complex kernel(const DomainSpec& domain, const CPoint& z, const CPoint& w) {
    switch (domain.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc:
            // A^2(D*) = A^2(D): same kernel
            if (!(std::abs(z[0]) < 1.0) || !(std::abs(w[0]) < 1.0))
                throw std::invalid_argument("kernel: arguments must lie in the open unit disc");
            return kernel_disc(z[0], w[0]);
        case DomainKind::Polydisc:
            require_interior(domain, z, "kernel");
            require_interior(domain, w, "kernel");
            return kernel_polydisc(z, w);
        case DomainKind::HartogsTriangle:
            return kernel_hartogs(z, w);
    }
    throw std::logic_error("kernel: unhandled domain");
}

double abs_kernel(const DomainSpec& domain, const CPoint& z, const CPoint& w) {
    return std::abs(kernel(domain, z, w));
}

} // namespace bergman
