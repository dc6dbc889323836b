#ifndef PMP_NUMBERFIELD_HPP
#define PMP_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "pmp/polynomial.hpp"
#include "pmp/rational.hpp"

namespace pmp {

// Q[x]/(m) for a monic integer polynomial m of degree >= 1. Fields from
// two_cos_field(N) carry the minimal polynomial of 2cos(pi/N); arbitrary
// monic m is accepted without an irreducibility check, so inversion of a
// zero divisor raises NonInvertibleError instead.
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(Poly min_poly);
    static std::shared_ptr<const NumberField> two_cos_field(long N);

    const Poly& min_poly() const { return min_poly_; }
    int degree() const { return min_poly_.degree(); }
    long two_cos_N() const { return two_cos_N_; }  // 0 unless built by two_cos_field

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.min_poly_ == b.min_poly_ && a.two_cos_N_ == b.two_cos_N_;
    }

private:
    NumberField(Poly m, long N) : min_poly_(std::move(m)), two_cos_N_(N) {}
    Poly min_poly_;
    long two_cos_N_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Canonical representative (degree < deg m) of an element of Q[x]/(m).
class FieldElement {
public:
    FieldElement(FieldPtr field, Poly representative);
    static FieldElement from_rational(FieldPtr field, Rational v);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.is_constant(); }
    Rational rational_value() const { return rep_.constant_term(); }

    FieldElement operator-() const { return {field_, -rep_}; }
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement pow(unsigned long e) const;

private:
    FieldPtr field_;
    Poly rep_;
};

// x * y = 1; extended gcd of the representative with min_poly. Throws
// DivisionByZero on x = 0 and NonInvertibleError when the gcd is nonconstant.
FieldElement field_inverse(const FieldElement& x);

// Monic minimal polynomial of 2cos(pi/N), built from the cyclotomic
// polynomial Phi_{2N} by exact division of z^{2N}-1 by all proper Phi_d and
// the palindromic fold x = z + 1/z. Degree phi(2N)/2 for N >= 2.
Poly minpoly_two_cos(long N);

// Phi_n by repeated exact division (no factorization dependency).
Poly cyclotomic(long n);

// Evaluate a rational-coefficient polynomial at a field element.
FieldElement eval_in_field(const Poly& p, const FieldElement& x);

std::string to_string(const FieldElement& x);  // polynomial in "w"

}  // namespace pmp

#endif
