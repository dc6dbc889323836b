#include "pmp/rational.hpp"

namespace pmp {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'", 0);
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return q;
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // base canonical implies num^e/den^e canonical
    return r;
}

std::optional<Rational> nth_root_rational(const Rational& x, unsigned long e) {
    if (e == 0) throw DegreeError("zeroth root");
    if (e == 1) return x;
    if (sgn(x) == 0) return Rational(0);
    if (sgn(x) < 0 && e % 2 == 0) return std::nullopt;
    Integer num = abs(x.get_num());
    Integer den = x.get_den();
    Integer rn, rd;
    int num_exact = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e);
    int den_exact = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e);
    if (!num_exact || !den_exact) return std::nullopt;
    if (sgn(x) < 0) rn = -rn;
    return make_rational(rn, rd);
}

bool is_square_rational(const Rational& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) &&
           mpz_perfect_square_p(x.get_den_mpz_t());
}

}  // namespace pmp
