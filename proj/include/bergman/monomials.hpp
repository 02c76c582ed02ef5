#ifndef BERGMAN_MONOMIALS_HPP
#define BERGMAN_MONOMIALS_HPP

#include <vector>

#include "bergman/domain.hpp"

namespace bergman {

// Laurent-monomial exponent pair; b is ignored on 1-D domains. Admissibility
// is the single source of truth for which monomials span A^2:
//   D, D^2 : exponents >= 0
//   D*     : treated as D (the Bergman spaces coincide)
//   H      : a >= 0 and a + b >= -1
struct MonomialIndex {
    int a = 0;
    int b = 0;
    bool operator==(const MonomialIndex& o) const { return a == o.a && b == o.b; }
};

bool admissible(const DomainSpec& domain, MonomialIndex idx);

int total_degree(MonomialIndex idx, const DomainSpec& domain);

// Exact L^2 squared norms:
//   D: pi/(a+1); D^2: pi^2/((a+1)(b+1)); H: pi^2/((a+1)(a+b+2)).
double monomial_norm_sq(const DomainSpec& domain, MonomialIndex idx);

// All admissible indices with total degree <= truncation, in a fixed order.
std::vector<MonomialIndex> admissible_indices(const DomainSpec& domain, int truncation);

} // namespace bergman

#endif
