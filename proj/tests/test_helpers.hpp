#ifndef PMP_TEST_HELPERS_HPP
#define PMP_TEST_HELPERS_HPP

#include <random>

#include "pmp/linear_map.hpp"
#include "pmp/polynomial.hpp"

namespace pmp::testing {

inline Poly random_poly(std::mt19937_64& rng, int degree, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Rational> cs(degree + 1);
    for (auto& c : cs) c = Rational(coeff(rng));
    while (is_zero(cs.back())) cs.back() = Rational(coeff(rng));
    return Poly::from_coeffs(std::move(cs));
}

inline Poly random_poly_nonzero_at_zero(std::mt19937_64& rng, int degree) {
    Poly p = random_poly(rng, degree);
    while (is_zero(p.constant_term()))
        p += Poly(Rational(1));
    return p;
}

inline LinearMap random_linear(std::mt19937_64& rng, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 4);
    Rational a(0);
    while (is_zero(a)) a = make_rational(num(rng), den(rng));
    return LinearMap(a, make_rational(num(rng), den(rng)));
}

// Independent synthetic-division oracle used to freeze divmod expectations.
inline std::pair<Poly, Poly> synthetic_divmod(const Poly& a, const Poly& b) {
    std::vector<Rational> rem;
    for (int i = 0; i <= a.degree(); ++i) rem.push_back(a.coeff(i));
    std::vector<Rational> quo;
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational t = rem[k + b.degree()] / b.lc();
        quo.insert(quo.begin(), t);
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= t * b.coeff(i);
    }
    return {Poly::from_coeffs(quo), Poly::from_coeffs(rem)};
}

}  // namespace pmp::testing

#endif
