#include <doctest.h>

#include "pmp/rational.hpp"

using namespace pmp;

TEST_CASE("rationals are canonical") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("parse round trip") {
    for (const char* s : {"3/4", "-7", "0", "22/7", "-1/3"}) {
        Rational q = parse_rational(s);
        CHECK(to_string(q) == s);
    }
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("powers and roots") {
    CHECK(pow_rational(make_rational(-2, 3), 3) == make_rational(-8, 27));
    CHECK(pow_rational(make_rational(5, 1), 0) == 1);
    CHECK(*nth_root_rational(make_rational(8, 27), 3) == make_rational(2, 3));
    CHECK(*nth_root_rational(make_rational(-8, 27), 3) == make_rational(-2, 3));
    CHECK(*nth_root_rational(make_rational(9, 4), 2) == make_rational(3, 2));
    CHECK(!nth_root_rational(make_rational(-9, 4), 2));
    CHECK(!nth_root_rational(make_rational(2, 1), 2));
    CHECK(is_square_rational(make_rational(49, 81)));
    CHECK(!is_square_rational(make_rational(16, 27)));
}
