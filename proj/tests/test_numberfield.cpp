#include <doctest.h>

#include <random>

#include "pmp/numberfield.hpp"

#ifdef PMP_HAVE_MPFR
#include <mpfr.h>
#endif

using namespace pmp;

namespace {
long euler_phi(long n) {
    // independent of the cyclotomic machinery: trial factorization
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly::from_coeffs(cs);
}
}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
    for (long n : {4, 9, 10, 15, 30, 60})
        CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("minpoly_two_cos") {
    CHECK(minpoly_two_cos(1) == P({2, 1}));
    CHECK(minpoly_two_cos(2) == P({0, 1}));      // 2cos(pi/2) = 0
    CHECK(minpoly_two_cos(6) == P({-3, 0, 1}));  // (2cos(pi/6))^2 = 3
    Poly m15 = minpoly_two_cos(15);
    CHECK(m15.degree() == 4);  // phi(30)/2
    CHECK(m15.lc() == 1);
    for (long n = 2; n <= 30; ++n) {
        Poly m = minpoly_two_cos(n);
        CHECK(m.lc() == 1);
        CHECK(m.degree() == euler_phi(2 * n) / 2);
    }
#ifdef PMP_HAVE_MPFR
    SUBCASE("2cos(pi/15) is a numeric root to 30 digits") {
        mpfr_t pi, x, acc, term;
        mpfr_inits2(256, pi, x, acc, term, (mpfr_ptr) nullptr);
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_div_ui(x, pi, 15, MPFR_RNDN);
        mpfr_cos(x, x, MPFR_RNDN);
        mpfr_mul_ui(x, x, 2, MPFR_RNDN);  // x = 2cos(pi/15)
        mpfr_set_ui(acc, 0, MPFR_RNDN);
        for (int i = m15.degree(); i >= 0; --i) {
            mpfr_mul(acc, acc, x, MPFR_RNDN);
            mpfr_set_q(term, m15.coeff(i).get_mpq_t(), MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
        }
        mpfr_abs(acc, acc, MPFR_RNDN);
        CHECK(mpfr_cmp_d(acc, 1e-30) < 0);
        mpfr_clears(pi, x, acc, term, (mpfr_ptr) nullptr);
    }
#endif
}

TEST_CASE("field arithmetic and inversion") {
    auto f = NumberField::two_cos_field(6);  // Q[x]/(x^2 - 3)
    FieldElement one = FieldElement::from_rational(f, Rational(1));
    FieldElement x = FieldElement::generator(f);
    CHECK(field_inverse(one) == one);
    // x^{-1} = x/3
    CHECK(field_inverse(x) == FieldElement(f, Poly::monomial(make_rational(1, 3), 1)));
    // (x-1)^{-1} = (x+1)/2
    FieldElement xm1 = x - one;
    CHECK(field_inverse(xm1) ==
          FieldElement(f, Poly::from_coeffs({make_rational(1, 2), make_rational(1, 2)})));
    CHECK(xm1 * field_inverse(xm1) == one);
    CHECK_THROWS_AS(field_inverse(x - x), DivisionByZero);

    SUBCASE("reducible modulus is rejected on inversion") {
        auto bad = NumberField::make(P({-1, 0, 1}));  // x^2 - 1
        FieldElement z = FieldElement::generator(bad) -
                         FieldElement::from_rational(bad, Rational(1));
        CHECK_THROWS_AS(field_inverse(z), NonInvertibleError);
    }

    SUBCASE("x * inverse(x) = 1 for random elements") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 7);
        for (auto field : {NumberField::two_cos_field(6), NumberField::two_cos_field(15)}) {
            FieldElement unit = FieldElement::from_rational(field, Rational(1));
            for (int i = 0; i < 500; ++i) {
                std::vector<Rational> cs(field->degree());
                for (auto& c : cs) c = make_rational(num(rng), den(rng));
                FieldElement e(field, Poly::from_coeffs(cs));
                if (e.is_zero()) continue;
                CHECK(e * field_inverse(e) == unit);
            }
        }
    }
}

TEST_CASE("field element printing") {
    auto f = NumberField::two_cos_field(6);
    FieldElement x = FieldElement::generator(f);
    CHECK(to_string(x) == "w");
    CHECK(to_string(x * x) == "3");  // reduced mod x^2 - 3
    CHECK(to_string(FieldElement(f, Poly::monomial(make_rational(1, 2), 1))) == "1/2*w");
}
