#include <doctest.h>

#include "pmp/node_angle.hpp"

using namespace pmp;

TEST_CASE("canonical form") {
    CHECK(make_node(17, 6).k == 5);   // 17 mod 12 = 5
    CHECK(make_node(-1, 6).k == 1);   // reflect
    CHECK(make_node(10, 6).k == 2);   // 10 -> 12 - 10
    CHECK(make_node(12, 6).k == 0);
    CHECK_THROWS_AS(make_node(1, 0), DegreeError);
    // equality across denominators: cos(pi/2) = cos(3pi/6)
    CHECK(make_node(1, 2) == make_node(3, 6));
}

TEST_CASE("Chebyshev images of nodes") {
    CHECK(node_cheb_image(make_node(0, 1), 5) == make_node(0, 1));  // T_5(1) = 1
    CHECK(node_cheb_image(make_node(1, 6), 3) == make_node(3, 6));  // T_3(cos pi/6) = 0
    CHECK(node_cheb_image(make_node(1, 15), 15) == make_node(15, 15));  // cos(pi) = -1
}

TEST_CASE("node relations") {
    CHECK(node_relations(make_node(1, 6), make_node(5, 6)).negatives);
    CHECK(node_relations(make_node(1, 6), make_node(1, 6)).equal);
    CHECK(node_relations(make_node(4, 15), make_node(1, 15)).neither());
    // the zero node is equal to and the negative of itself
    NodeRelation r = node_relations(make_node(3, 6), make_node(3, 6));
    CHECK(r.equal);
    CHECK(r.negatives);
    CHECK(node_negate(make_node(1, 6)) == make_node(5, 6));
}

TEST_CASE("embedding into the node field") {
    auto f6 = NumberField::two_cos_field(6);
    CHECK(node_embed(make_node(0, 6), f6) ==
          FieldElement::from_rational(f6, Rational(1)));
    CHECK(node_embed(make_node(1, 6), f6) ==
          FieldElement(f6, Poly::monomial(make_rational(1, 2), 1)));  // sqrt(3)/2
    CHECK(node_embed(make_node(3, 6), f6).is_zero());                 // cos(pi/2)
    CHECK_THROWS_AS(node_embed(make_node(1, 5), f6), EndpointError);
}

TEST_CASE("semigroup law T_n o T_m = T_nm on nodes") {
    for (std::int64_t N : {1, 2, 6, 15}) {
        for (std::int64_t k = 0; k <= N; ++k) {
            NodeAngle p = make_node(k, N);
            for (std::int64_t n = 1; n <= 50; ++n)
                for (std::int64_t m = 1; m <= 50; ++m) {
                    bool ok = node_cheb_image(node_cheb_image(p, n), m) ==
                              node_cheb_image(p, n * m);
                    if (!ok) CHECK(ok);  // keep the assertion count manageable
                }
        }
    }
}

TEST_CASE("direct node evaluation") {
    CHECK(eval_at_node(chebyshev(3), make_node(1, 6)).is_zero());
    CHECK(eval_at_node(Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)}),
                       make_node(0, 6)).is_zero());  // z^2 - 1 at cos(0)
}

TEST_CASE("embedding commutes with Chebyshev evaluation") {
    for (std::int64_t N : {6, 15}) {
        auto f = NumberField::two_cos_field(N);
        for (std::int64_t k = 0; k <= N; ++k) {
            NodeAngle p = make_node(k, N);
            FieldElement x = node_embed(p, f);
            for (long n = 1; n <= 20; ++n) {
                CHECK(node_embed(node_cheb_image(p, n), f) ==
                      eval_in_field(chebyshev(n), x));
            }
        }
    }
}

TEST_CASE("node text form") {
    CHECK(to_string(make_node(5, 6)) == "cos(5*pi/6)");
    CHECK(parse_node("cos(5*pi/6)") == make_node(5, 6));
    CHECK(parse_node(" cos( 17 * pi / 6 ) ") == make_node(5, 6));
    CHECK_THROWS_AS(parse_node("cos(pi/6)"), ParseError);
    CHECK_THROWS_AS(parse_node("sin(1*pi/6)"), ParseError);
}
