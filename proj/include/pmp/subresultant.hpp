#ifndef PMP_SUBRESULTANT_HPP
#define PMP_SUBRESULTANT_HPP

#include "pmp/polynomial.hpp"

namespace pmp {

// Res_z(A, B) for A, B in Q[t][z] via the subresultant (fraction-free) PRS.
Polynomial<Rational> resultant_in_z(const PolyOverPoly& a, const PolyOverPoly& b);

// Monic polynomial in a fresh variable t with the same roots (and
// multiplicities) as prod(t - P(beta)) over the roots beta of P', realized as
// Res_z(P(z) - t, P'(z)). Requires deg P >= 2.
Poly critical_value_poly(const Poly& p);

}  // namespace pmp

#endif
