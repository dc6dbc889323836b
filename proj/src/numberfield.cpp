#include "pmp/numberfield.hpp"

#include <map>

namespace pmp {

std::shared_ptr<const NumberField> NumberField::make(Poly min_poly) {
    if (min_poly.degree() < 1) throw DegreeError("min_poly must have degree >= 1");
    if (!(min_poly.lc() == Rational(1)))
        throw DegreeError("min_poly must be monic");
    for (const Rational& c : min_poly.coeffs())
        if (!is_integer(c)) throw DegreeError("min_poly must have integer coefficients");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly), 0));
}

std::shared_ptr<const NumberField> NumberField::two_cos_field(long N) {
    if (N < 1) throw DegreeError("two_cos_field requires N >= 1");
    return std::shared_ptr<const NumberField>(new NumberField(minpoly_two_cos(N), N));
}

FieldElement::FieldElement(FieldPtr field, Poly representative)
    : field_(std::move(field)) {
    if (!field_) throw ConsistencyError("null field");
    rep_ = divmod(representative, field_->min_poly()).second;
}

FieldElement FieldElement::from_rational(FieldPtr field, Rational v) {
    return {std::move(field), Poly(std::move(v))};
}

FieldElement FieldElement::generator(FieldPtr field) {
    return {std::move(field), Poly::variable()};
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(*a.field() == *b.field()))
        throw EndpointError("field elements from different number fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.rep() + b.rep()};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.rep() - b.rep()};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field(), a.rep() * b.rep()};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * field_inverse(b);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.rep() == b.rep();
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement r = from_rational(field_, Rational(1));
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

FieldElement field_inverse(const FieldElement& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero field element");
    auto [g, u, v] = extended_gcd(x.rep(), x.field()->min_poly());
    (void)v;
    if (g.degree() > 0)
        throw NonInvertibleError(
            "element shares a factor with min_poly (reducible field rejected)");
    // g is monic constant 1, so u * rep = 1 mod m already.
    return {x.field(), u};
}

Poly cyclotomic(long n) {
    if (n < 1) throw DegreeError("cyclotomic index must be positive");
    std::map<long, Poly> phi;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        // z^d - 1
        std::vector<Rational> cs(d + 1, Rational(0));
        cs[0] = Rational(-1);
        cs[d] = Rational(1);
        Poly num = Poly::from_coeffs(std::move(cs));
        for (auto& [e, p] : phi)
            if (d % e == 0) num = exact_div(num, p);
        phi.emplace(d, std::move(num));
    }
    return phi.at(n);
}

Poly minpoly_two_cos(long N) {
    if (N < 1) throw DegreeError("minpoly_two_cos requires N >= 1");
    if (N == 1) return Poly::from_coeffs({Rational(2), Rational(1)});  // 2cos(pi) = -2
    Poly c = cyclotomic(2 * N);
    const int d = c.degree() / 2;  // phi(2N) is even for N >= 2
    // Palindromic fold: find psi with z^d * psi(z + 1/z) = c.
    std::vector<Rational> psi(d + 1, Rational(0));
    Poly r = c;
    for (int j = d; j >= 0; --j) {
        Rational cj = r.coeff(d + j);
        psi[j] = cj;
        if (is_zero(cj)) continue;
        // subtract cj * z^d * (z + 1/z)^j = cj * sum_i C(j,i) z^{d+j-2i}
        Integer binom = 1;
        std::vector<Rational> sub(d + j + 1, Rational(0));
        for (int i = 0; i <= j; ++i) {
            sub[d + j - 2 * i] = cj * Rational(binom);
            binom = binom * (j - i) / (i + 1);
        }
        r -= Poly::from_coeffs(std::move(sub));
    }
    if (!r.is_zero())
        throw ConsistencyError("cyclotomic fold left a nonzero remainder");
    return Poly::from_coeffs(std::move(psi));
}

FieldElement eval_in_field(const Poly& p, const FieldElement& x) {
    FieldElement acc = FieldElement::from_rational(x.field(), Rational(0));
    if (p.is_zero()) return acc;
    const auto& c = p.coeffs();
    acc = FieldElement::from_rational(x.field(), c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = acc * x + FieldElement::from_rational(x.field(), c[i]);
    return acc;
}

std::string to_string(const FieldElement& x) {
    const Poly& p = x.rep();
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rational ac = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string term;
        if (i == 0)
            term = to_string(ac);
        else {
            if (!(ac == 1)) term = to_string(ac) + "*";
            term += i == 1 ? "w" : "w^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

}  // namespace pmp
