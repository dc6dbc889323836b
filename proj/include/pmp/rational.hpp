#ifndef PMP_RATIONAL_HPP
#define PMP_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pmp/errors.hpp"

namespace pmp {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) as long as every constructed value is canonicalized, so the
// factories below are the only approved entry points for non-integer data.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Text form "p/q" or "p".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Rational pow_rational(const Rational& base, unsigned long e);

// Exact real e-th root when one exists in Q. For even e the positive root
// is returned; negative arguments with even e yield nullopt.
std::optional<Rational> nth_root_rational(const Rational& x, unsigned long e);

bool is_square_rational(const Rational& x);

}  // namespace pmp

#endif
