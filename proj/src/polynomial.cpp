#include "pmp/polynomial.hpp"

namespace pmp {

Poly chebyshev(long n) {
    if (n < 0) throw DegreeError("chebyshev index must be nonnegative");
    Poly prev(Rational(1));
    if (n == 0) return prev;
    Poly cur = Poly::variable();
    const Poly two_z = Poly::monomial(Rational(2), 1);
    for (long i = 1; i < n; ++i) {
        Poly next = two_z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace pmp
