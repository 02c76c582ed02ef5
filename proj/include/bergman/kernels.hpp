#ifndef BERGMAN_KERNELS_HPP
#define BERGMAN_KERNELS_HPP

#include "bergman/domain.hpp"

namespace bergman {

// Closed-form Bergman kernels. All evaluators refuse boundary and exterior
// points (strict inequalities) instead of returning infinities.

// K_D(z; conj w) = 1 / (pi (1 - z conj(w))^2)
Complex kernel_disc(Complex z, Complex w);

// Product of per-coordinate disc kernels on D^n.
Complex kernel_polydisc(const CPoint& z, const CPoint& w);

// K_H in the cancellation-safe arrangement
//   z2 conj(w2) / (pi^2 (z2 conj(w2) - z1 conj(w1))^2 (1 - z2 conj(w2))^2);
// the textbook display divides by z2 conj(w2) twice, which loses digits when
// |z2 w2| is small.
Complex kernel_hartogs(const CPoint& z, const CPoint& w);

Complex kernel(const DomainSpec& domain, const CPoint& z, const CPoint& w);

double abs_kernel(const DomainSpec& domain, const CPoint& z, const CPoint& w);

} // namespace bergman

#endif
