#ifndef BERGMAN_GAUSS_HPP
#define BERGMAN_GAUSS_HPP

#include <cstddef>
#include <vector>

namespace bergman {

struct Nodes1D {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on P_n.
Nodes1D gauss_legendre(int n);

// Gauss-Legendre mapped to [a,b].
Nodes1D gauss_legendre(int n, double a, double b);

// Composite rule over explicit breakpoints, n points per panel.
Nodes1D composite_gauss(int n_per_panel, const std::vector<double>& breaks);

// Panels on [0,1] geometrically refined toward 1 down to width `tip`
// (for integrands singular at r = 1, e.g. |1 - s r|^{-beta} with s near 1).
std::vector<double> panels_refined_right(double tip, int base_splits = 2);

// Panels on [a,b] geometrically refined toward a.
std::vector<double> panels_refined_left(double a, double b, double tip);

} // namespace bergman

#endif
