#include "pmp/subresultant.hpp"

namespace pmp {

namespace {

using D = Polynomial<Rational>;  // coefficient domain Q[t]

// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b; returns r.
PolyOverPoly pseudo_remainder(const PolyOverPoly& a, const PolyOverPoly& b) {
    PolyOverPoly r = a;
    const D& d = b.lc();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        D t = r.lc();
        int k = r.degree() - b.degree();
        r = r.scaled(d) - b.shifted(k).scaled(t);
        --e;
    }
    if (e > 0) {
        D scale(Rational(1));
        for (int i = 0; i < e; ++i) scale = scale * d;
        r = r.scaled(scale);
    }
    return r;
}

PolyOverPoly divide_coeffs(const PolyOverPoly& p, const D& d) {
    std::vector<D> out;
    out.reserve(p.coeffs().size());
    for (const D& c : p.coeffs()) out.push_back(exact_div(c, d));
    return PolyOverPoly::from_coeffs(std::move(out));
}

D pow_d(const D& x, int e) {
    D r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

Polynomial<Rational> resultant_in_z(const PolyOverPoly& a, const PolyOverPoly& b) {
    if (a.is_zero() || b.is_zero()) return D{};
    if (a.degree() < b.degree()) {
        D r = resultant_in_z(b, a);
        if ((a.degree() * b.degree()) % 2 != 0) r = -r;
        return r;
    }
    if (b.degree() == 0) return pow_d(b.lc(), a.degree());

    PolyOverPoly r0 = a, r1 = b;
    D g(Rational(1)), h(Rational(1));
    while (true) {
        int delta = r0.degree() - r1.degree();
        PolyOverPoly rem = pseudo_remainder(r0, r1);
        if (rem.is_zero()) return D{};  // nontrivial gcd, resultant vanishes
        rem = divide_coeffs(rem, g * pow_d(h, delta));
        r0 = std::move(r1);
        r1 = std::move(rem);
        g = r0.lc();
        // h = g^delta * h^(1-delta), exact in D
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(pow_d(g, delta), pow_d(h, delta - 1));
        if (r1.degree() == 0) {
            int d0 = r0.degree();
            // S_0 = lc(r1)^{d0} / h^{d0-1}
            return exact_div(pow_d(r1.lc(), d0), pow_d(h, d0 - 1));
        }
    }
}

Poly critical_value_poly(const Poly& p) {
    if (p.degree() < 2)
        throw DegreeError("critical_value_poly requires deg P >= 2");
    // A = P(z) - t, B = P'(z) in Q[t][z]
    std::vector<D> ac;
    ac.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) ac.push_back(D(p.coeff(i)));
    ac[0] = ac[0] - D::variable();
    PolyOverPoly a = PolyOverPoly::from_coeffs(std::move(ac));
    Poly dp = derivative(p);
    std::vector<D> bc;
    bc.reserve(dp.degree() + 1);
    for (int i = 0; i <= dp.degree(); ++i) bc.push_back(D(dp.coeff(i)));
    PolyOverPoly b = PolyOverPoly::from_coeffs(std::move(bc));
    Poly res = resultant_in_z(a, b);
    if (res.is_zero())
        throw ConsistencyError("resultant of P - t and P' vanished");
    return make_monic(res);
}

}  // namespace pmp
