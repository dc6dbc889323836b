#include <doctest.h>

#include <random>

#include "pmp/polynomial.hpp"
#include "pmp/text_format.hpp"
#include "test_helpers.hpp"

using namespace pmp;
using pmp::testing::random_poly;
using pmp::testing::synthetic_divmod;

namespace {
Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly::from_coeffs(cs);
}
}  // namespace

TEST_CASE("ring arithmetic") {
    Poly z2 = Poly::monomial(Rational(1), 2);
    CHECK((z2 + (-z2)).is_zero());
    CHECK(P({-1, 0, 1}) == P({-1, 1}) * P({1, 1}));  // (z-1)(z+1) = z^2 - 1
    SUBCASE("divmod against the synthetic-division oracle") {
        // frozen: (z^3 + 1) / (z + 1) = z^2 - z + 1 rem 0
        auto [q, r] = divmod(P({1, 0, 0, 1}), P({1, 1}));
        CHECK(q == P({1, -1, 1}));
        CHECK(r.is_zero());
        std::mt19937_64 rng(7);
        for (int i = 0; i < 50; ++i) {
            Poly a = random_poly(rng, 1 + int(rng() % 9));
            Poly b = random_poly(rng, 1 + int(rng() % 5));
            auto [q1, r1] = divmod(a, b);
            auto [q2, r2] = synthetic_divmod(a, b);
            CHECK(q1 == q2);
            CHECK(r1 == r2);
            CHECK(q1 * b + r1 == a);
        }
    }
    CHECK_THROWS_AS(divmod(P({1, 1}), Poly{}), DivisionByZero);
}

TEST_CASE("composition") {
    CHECK(compose(Poly::monomial(Rational(1), 2), Poly::monomial(Rational(1), 3)) ==
          Poly::monomial(Rational(1), 6));
    // T_2 o T_3 = T_6, expanded by hand
    Poly t6 = P({-1, 0, 18, 0, -48, 0, 32});
    CHECK(compose(P({-1, 0, 2}), P({0, -3, 0, 4})) == t6);
    CHECK(chebyshev(6) == t6);
    // z(z-1)^2 o z^2 = z^2 (z^2 - 1)^2
    Poly zr2 = P({0, 1, -2, 1});  // z(z-1)^2
    CHECK(compose(zr2, Poly::monomial(Rational(1), 2)) == P({0, 0, 1, 0, -2, 0, 1}));
    SUBCASE("associativity on random triples") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(rng, 1 + int(rng() % 5));
            Poly b = random_poly(rng, 1 + int(rng() % 5));
            Poly c = random_poly(rng, 1 + int(rng() % 5));
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
}

TEST_CASE("chebyshev recurrence facts") {
    CHECK(chebyshev(0) == P({1}));
    CHECK(chebyshev(1) == P({0, 1}));
    CHECK(chebyshev(2) == P({-1, 0, 2}));
    for (long n = 1; n <= 12; ++n)
        for (long m = 1; m <= 12; ++m)
            CHECK(compose(chebyshev(n), chebyshev(m)) == chebyshev(n * m));
    Poly minus_z = P({0, -1});
    for (long n = 0; n <= 24; ++n) {
        Poly lhs = compose(chebyshev(n), minus_z);
        Poly rhs = n % 2 == 0 ? chebyshev(n) : -chebyshev(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("calculus") {
    Poly z3 = Poly::monomial(Rational(1), 3);
    CHECK(derivative(z3) == Poly::monomial(Rational(3), 2));
    CHECK(antiderivative(z3) == Poly::monomial(make_rational(1, 4), 4));
    CHECK(derivative(Poly{}).is_zero());
    CHECK(antiderivative(Poly{}).is_zero());
    // T_2 -> (4z, 2z^3/3 - z)
    CHECK(derivative(chebyshev(2)) == P({0, 4}));
    CHECK(antiderivative(chebyshev(2)) ==
          Poly::from_coeffs({Rational(0), Rational(-1), Rational(0), make_rational(2, 3)}));
    SUBCASE("antiderivative then derivative is the identity") {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 200; ++i) {
            Poly p = random_poly(rng, int(rng() % 10));
            CHECK(derivative(antiderivative(p)) == p);
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(eval_poly(P({-1, 0, 1}), Rational(1)) == 0);
    CHECK(eval_poly(Poly::monomial(Rational(1), 2), make_rational(3, 2)) ==
          make_rational(9, 4));
}

TEST_CASE("gcd and squarefree structure") {
    CHECK(gcd_monic(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // squarefree(z^2 (z^2-1)^2): multiplicity-2 part z(z^2-1) = z^3 - z
    auto sf = squarefree_factorization(P({0, 0, 1, 0, -2, 0, 1}));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].first == P({0, -1, 0, 1}));
    CHECK(sf[0].second == 2);
    // gcd(T_4', T_4^2 - 1) covers all interior critical points
    Poly t4 = chebyshev(4);
    Poly g = gcd_monic(derivative(t4), t4 * t4 - Poly(Rational(1)));
    CHECK(g == make_monic(derivative(t4)));
    for (int i = 0; i < 3; ++i) {
        // all critical values of T_4 are +-1: derivative divides T_4^2 - 1
        auto [q, r] = divmod(t4 * t4 - Poly(Rational(1)), derivative(t4));
        CHECK(r.is_zero());
    }
    SUBCASE("squarefree product reconstructs the monic input") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 40; ++i) {
            Poly a = random_poly(rng, 1 + int(rng() % 3));
            Poly b = random_poly(rng, 1 + int(rng() % 3));
            Poly p = a * a * b;
            auto sf2 = squarefree_factorization(p);
            Poly prod{Rational(1)};
            for (const auto& [f, m] : sf2) prod = prod * pow_poly(f, m);
            CHECK(prod == make_monic(p));
        }
    }
}

TEST_CASE("printing") {
    CHECK(poly_to_string(chebyshev(6)) == "32*x^6 - 48*x^4 + 18*x^2 - 1");
    CHECK(poly_to_string(Poly{}) == "0");
    CHECK(poly_to_string(P({3})) == "3");
    CHECK(poly_to_string(Poly::from_coeffs({Rational(0), make_rational(-3, 4), Rational(0),
                                            Rational(1)})) == "x^3 - 3/4*x");
    CHECK(poly_to_coeff_list(P({-1, 0, 1})) == "[-1, 0, 1]");
}
