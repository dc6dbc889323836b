#include "pmp/ritt_forms.hpp"

#include <algorithm>
#include <numeric>

#include "pmp/subresultant.hpp"

namespace pmp {

std::optional<EquivWitness> power_equiv(const Poly& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeError("power_equiv requires deg P >= 2");
    Poly dp = derivative(p);
    // dp must be c (z - z0)^(n-1); read z0 off the two top coefficients.
    Rational z0 = -dp.coeff(n - 2) / (dp.lc() * Rational(n - 1));
    Poly shift = Poly::from_coeffs({z0, Rational(1)});  // z + z0
    Poly sh = compose(p, shift);
    for (int i = 1; i < n; ++i)
        if (!is_zero(sh.coeff(i))) return std::nullopt;
    EquivWitness w;
    w.kind = EquivWitness::Kind::Power;
    w.n = n;
    w.mu = LinearMap(sh.lc(), sh.constant_term());
    w.nu = LinearMap(Rational(1), -z0);
    return w;
}

namespace {

// Solve G = sigma o T_m for a linear sigma; G's degree must be m.
std::optional<LinearMap> match_linear_cheb(const Poly& g, long m) {
    if (g.degree() != m || m < 1) return std::nullopt;
    Poly t = chebyshev(m);
    Rational alpha = g.lc() / t.lc();
    Poly rest = g - t.scaled(alpha);
    if (rest.degree() > 0) return std::nullopt;
    return LinearMap(alpha, rest.constant_term());
}

std::optional<EquivWitness> cheb_try_orientation(const Poly& p, const Rational& v1,
                                                 const Rational& v2) {
    // mu maps 1 -> v1 and -1 -> v2.
    LinearMap mu((v1 - v2) / 2, (v1 + v2) / 2);
    Poly g = mu.inverse().apply_outer(p);
    auto nu = inner_quotient(g, chebyshev(p.degree()));
    if (!nu || nu->degree() != 1) return std::nullopt;
    EquivWitness w;
    w.kind = EquivWitness::Kind::Chebyshev;
    w.n = p.degree();
    w.mu = mu;
    w.nu = LinearMap::from_poly(*nu);
    return w;
}

}  // namespace

std::optional<EquivWitness> cheb_equiv(const Poly& p) {
    const long n = p.degree();
    if (n < 3) throw DegreeError("cheb_equiv requires deg P >= 3");
    Poly dp = derivative(p);
    if (!is_squarefree(dp)) return std::nullopt;
    Poly cvp = critical_value_poly(p);
    auto sf = squarefree_factorization(cvp);
    const long lo = (n % 2 == 0) ? (n - 2) / 2 : (n - 1) / 2;
    const long hi = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    if (n % 2 == 0) {
        // two rational critical values with multiplicities (n-2)/2 and n/2
        if (sf.size() != 2) return std::nullopt;
        const auto& [g1, m1] = sf[0];
        const auto& [g2, m2] = sf[1];
        if (g1.degree() != 1 || g2.degree() != 1) return std::nullopt;
        if (!((m1 == lo && m2 == hi) || (m1 == hi && m2 == lo))) return std::nullopt;
        Rational r1 = -g1.constant_term();
        Rational r2 = -g2.constant_term();
        Rational v_plus = (m1 == lo) ? r1 : r2;   // value under the (1,1,2,...) fibre
        Rational v_minus = (m1 == lo) ? r2 : r1;  // value under the (2,...,2) fibre
        return cheb_try_orientation(p, v_plus, v_minus);
    }
    // odd: both multiplicities (n-1)/2; one quadratic factor or two linear ones
    if (sf.size() == 1 && sf[0].second == lo && sf[0].first.degree() == 2) {
        const Poly& g = sf[0].first;
        Rational b = g.coeff(1), c = g.coeff(0);
        Rational disc = b * b - Rational(4) * c;
        if (is_square_rational(disc)) {
            Rational root = *nth_root_rational(disc, 2);
            Rational v1 = (-b + root) / 2;
            Rational v2 = (-b - root) / 2;
            auto w = cheb_try_orientation(p, v1, v2);
            if (!w) w = cheb_try_orientation(p, v2, v1);
            return w;
        }
        EquivWitness w;
        w.kind = EquivWitness::Kind::Chebyshev;
        w.n = n;
        w.extension_disc = disc;
        return w;
    }
    if (sf.size() == 2 && sf[0].second == lo && sf[1].second == lo &&
        sf[0].first.degree() == 1 && sf[1].first.degree() == 1) {
        Rational v1 = -sf[0].first.constant_term();
        Rational v2 = -sf[1].first.constant_term();
        auto w = cheb_try_orientation(p, v1, v2);
        if (!w) w = cheb_try_orientation(p, v2, v1);
        return w;
    }
    return std::nullopt;
}

std::optional<std::tuple<LinearMap, long, LinearMap>> cheb_decompose(const Poly& p) {
    const long n = p.degree();
    if (n < 1) return std::nullopt;
    if (n == 1) {
        return std::make_tuple(LinearMap::from_poly(p), 1L, LinearMap::identity());
    }
    if (n == 2) {
        // p = a z^2 + b z + c = sigma o T_2 o (z + b/2a) with T_2 = theta o z^2
        Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        LinearMap mu(Rational(1), b / (2 * a));
        Rational k = c - b * b / (4 * a);
        // sigma = (a z^2 + k) o z^2-side folded through theta^{-1} = (z+1)/2
        LinearMap sigma(a / 2, a / 2 + k);
        return std::make_tuple(sigma, 2L, mu);
    }
    auto w = cheb_equiv(p);
    if (!w || !w->materialized()) return std::nullopt;
    return std::make_tuple(*w->mu, w->n, *w->nu);
}

std::array<Poly, 4> reconstruct_ritt(const RittForm& rf) {
    Poly p1, w1, p2, w2;
    if (std::holds_alternative<RittFirstKind>(rf.form)) {
        const auto& f = std::get<RittFirstKind>(rf.form);
        Poly zs_rn = pow_poly(f.R, f.n).shifted(f.s);          // z^s R^n(z)
        Poly zs_rzn = compose(f.R, Poly::monomial(Rational(1), f.n)).shifted(f.s);
        p1 = f.nu.apply_outer(compose(zs_rn, f.sigma1.inverse().to_poly()));
        w1 = f.sigma1.apply_outer(compose(Poly::monomial(Rational(1), f.n), f.mu.to_poly()));
        p2 = f.nu.apply_outer(compose(Poly::monomial(Rational(1), f.n), f.sigma2.inverse().to_poly()));
        w2 = f.sigma2.apply_outer(compose(zs_rzn, f.mu.to_poly()));
    } else {
        const auto& f = std::get<RittSecondKind>(rf.form);
        p1 = f.nu.apply_outer(compose(chebyshev(f.m), f.sigma1.inverse().to_poly()));
        w1 = f.sigma1.apply_outer(compose(chebyshev(f.n), f.mu.to_poly()));
        p2 = f.nu.apply_outer(compose(chebyshev(f.n), f.sigma2.inverse().to_poly()));
        w2 = f.sigma2.apply_outer(compose(chebyshev(f.m), f.mu.to_poly()));
    }
    if (rf.swapped) return {p2, w2, p1, w1};
    return {p1, w1, p2, w2};
}

namespace {

// Split H = z^s R(z^n) by the exponent pattern; requires all nonzero
// exponents congruent mod n and H(0) = 0 when s > 0 semantics are wanted.
std::optional<std::pair<long, Poly>> split_power_pattern(const Poly& h, long n) {
    if (h.is_zero()) return std::nullopt;
    long s = -1;
    for (int i = 0; i <= h.degree(); ++i) {
        if (is_zero(h.coeff(i))) continue;
        if (s < 0)
            s = i;
        else if ((i - s) % n != 0)
            return std::nullopt;
    }
    std::vector<Rational> rc((h.degree() - s) / n + 1, Rational(0));
    for (int i = 0; i <= h.degree(); ++i)
        if (!is_zero(h.coeff(i))) rc[(i - s) / n] = h.coeff(i);
    return std::make_pair(s, Poly::from_coeffs(std::move(rc)));
}

// G = nu o z^n exactly, i.e. only exponents 0 and n.
std::optional<LinearMap> match_linear_power(const Poly& g, long n) {
    if (g.degree() != n) return std::nullopt;
    for (int i = 1; i < n; ++i)
        if (!is_zero(g.coeff(i))) return std::nullopt;
    return LinearMap(g.lc(), g.constant_term());
}

std::optional<RittForm> try_first_kind(const Poly& pa, const Poly& wa, const Poly& pb,
                                       const Poly& wb, bool swapped) {
    if (wa.degree() < 1) return std::nullopt;
    std::optional<EquivWitness> wit;
    if (wa.degree() >= 2) {
        wit = power_equiv(wa);
        if (!wit) return std::nullopt;
    } else {
        EquivWitness lin;
        lin.kind = EquivWitness::Kind::Power;
        lin.n = 1;
        lin.mu = LinearMap::from_poly(wa);
        lin.nu = LinearMap::identity();
        wit = lin;
    }
    const long n = wit->n;
    LinearMap sigma1 = *wit->mu, mu = *wit->nu;
    Poly g = compose(wb, mu.inverse().to_poly());
    Rational beta = g.constant_term();
    LinearMap sigma2(Rational(1), beta);
    Poly h = g - Poly(beta);
    auto sp = split_power_pattern(h, n);
    if (!sp) return std::nullopt;
    auto [s, r] = *sp;
    if (n > 1 && (s < 1 || std::gcd(s, n) != 1)) return std::nullopt;
    auto nu = match_linear_power(compose(pb, sigma2.to_poly()), n);
    if (!nu) return std::nullopt;
    // verify P_a = nu o z^s R^n(z) o sigma1^{-1}
    Poly zs_rn = pow_poly(r, n).shifted(s);
    if (!(compose(pa, sigma1.to_poly()) == nu->apply_outer(zs_rn))) return std::nullopt;
    RittForm out;
    out.form = RittFirstKind{*nu, sigma1, sigma2, mu, std::move(r), s, n};
    out.swapped = swapped;
    return out;
}

std::optional<RittForm> try_second_kind(const Poly& pa, const Poly& wa, const Poly& pb,
                                        const Poly& wb, bool swapped) {
    if (wa.degree() < 3) return std::nullopt;
    auto wit = cheb_equiv(wa);
    if (!wit || !wit->materialized()) return std::nullopt;
    const long n = wit->n;
    const long m = wb.degree();
    LinearMap sigma1 = *wit->mu, mu = *wit->nu;
    auto sigma2 = match_linear_cheb(compose(wb, mu.inverse().to_poly()), m);
    if (!sigma2) return std::nullopt;
    auto nu = match_linear_cheb(compose(pb, sigma2->to_poly()), n);
    if (!nu) return std::nullopt;
    if (!(compose(pa, sigma1.to_poly()) == nu->apply_outer(chebyshev(m))))
        return std::nullopt;
    RittForm out;
    out.form = RittSecondKind{*nu, sigma1, *sigma2, mu, m, n};
    out.swapped = swapped;
    return out;
}

}  // namespace

RittForm ritt2_normal_form(const Poly& p1, const Poly& w1, const Poly& p2,
                           const Poly& w2) {
    if (p1.degree() < 1 || p2.degree() < 1 || w1.degree() < 1 || w2.degree() < 1)
        throw HypothesisViolation("ritt2 requires nonconstant polynomials");
    if (!(compose(p1, w1) == compose(p2, w2)))
        throw HypothesisViolation("composites P1 o W1 and P2 o W2 differ");
    if (std::gcd(p1.degree(), p2.degree()) != 1 ||
        std::gcd(w1.degree(), w2.degree()) != 1)
        throw HypothesisViolation("degree GCD conditions fail");

    if (auto f = try_first_kind(p1, w1, p2, w2, false)) return *f;
    if (auto f = try_first_kind(p2, w2, p1, w1, true)) return *f;
    if (auto f = try_second_kind(p1, w1, p2, w2, false)) return *f;
    if (auto f = try_second_kind(p2, w2, p1, w1, true)) return *f;
    throw ClassificationFailure("no Ritt normal form matched (inexact data?)");
}

FactorForm power_cofactor_form(const Poly& p1, long n, const Poly& p2, const Poly& w2) {
    if (n < 2) throw HypothesisViolation("power cofactor form requires n >= 2");
    Poly f = compose(p1, Poly::monomial(Rational(1), n));
    if (!(f == compose(p2, w2)))
        throw HypothesisViolation("composites differ");
    Rational beta = w2.constant_term();
    LinearMap sigma(Rational(1), beta);
    auto sp = split_power_pattern(w2 - Poly(beta), n);
    if (!sp) throw HypothesisViolation("W2 is not of the form sigma o z^s R(z^n)");
    auto [s, r] = *sp;
    long e = std::gcd(n, static_cast<long>(w2.degree()));
    Poly c = compose(pow_poly(r, n / e), Poly::monomial(Rational(1), n)).shifted(s * n / e);
    auto u = left_quotient(f, c);
    if (!u) throw HypothesisViolation("P is not U o z^{sn/e} R^{n/e}(z^n)");
    return PowerSide{sigma, std::move(r), s, e};
}

FactorForm cheb_cofactor_form(const Poly& p1, long n, const Poly& p2, const Poly& w2) {
    if (n < 1) throw HypothesisViolation("cheb cofactor form requires n >= 1");
    const long m = w2.degree();
    if (m % n == 0) throw HypothesisViolation("n must not divide deg W2");
    Poly f = compose(p1, chebyshev(n));
    if (!(f == compose(p2, w2)))
        throw HypothesisViolation("composites differ");
    if (auto sigma = match_linear_cheb(w2, m)) {
        long t = std::lcm(n, m);
        auto u = left_quotient(f, chebyshev(t));
        if (u) return ChebSide{*sigma, t};
    }
    if (n % 2 == 0) {
        auto y = left_quotient(w2, chebyshev(n / 2));
        if (y) {
            Rational beta = y->constant_term();
            Poly h = *y - Poly(beta);
            auto sp = split_power_pattern(h, 2);
            if (sp && sp->first == 1) {
                Poly s_poly = sp->second;
                // P must be U o z^2 S^2(z^2) o T_{n/2}
                Poly core = compose(pow_poly(s_poly, 2), Poly::monomial(Rational(1), 2))
                                .shifted(2);
                auto u = left_quotient(f, compose(core, chebyshev(n / 2)));
                if (u) return ChebHalf{LinearMap(Rational(1), beta), std::move(s_poly)};
            }
        }
    }
    throw HypothesisViolation("W2 matches neither cofactor form");
}

namespace {

std::optional<EquivWitness> scan_one(const Poly& p) {
    if (p.degree() == 1) {
        EquivWitness w;
        w.kind = EquivWitness::Kind::Power;
        w.n = 1;
        w.mu = LinearMap::from_poly(p);
        w.nu = LinearMap::identity();
        return w;
    }
    if (p.degree() >= 2)
        if (auto w = power_equiv(p)) return w;
    if (p.degree() >= 3)
        if (auto w = cheb_equiv(p)) return w;
    return std::nullopt;
}

}  // namespace

WitnessScan witness_scan(const std::vector<Poly>& ps, const std::vector<Poly>& ws) {
    if (ps.size() != ws.size() || ps.empty())
        throw HypothesisViolation("witness scan requires matched P_i, W_i");
    Poly f = compose(ps[0], ws[0]);
    long gp = 0, gw = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].degree() < 1 || ws[i].degree() < 1)
            throw HypothesisViolation("witness scan requires nonconstant polynomials");
        if (i > 0 && !(compose(ps[i], ws[i]) == f))
            throw HypothesisViolation("composites are not all equal");
        gp = std::gcd(gp, static_cast<long>(ps[i].degree()));
        gw = std::gcd(gw, static_cast<long>(ws[i].degree()));
    }
    if (gp != 1 || gw != 1)
        throw HypothesisViolation("degree GCD conditions of the theorem fail");
    WitnessScan out;
    bool have_outer = false, have_inner = false;
    for (std::size_t i = 0; i < ps.size() && !have_outer; ++i)
        if (auto w = scan_one(ps[i])) {
            out.outer_index = i;
            out.outer = *w;
            have_outer = true;
        }
    for (std::size_t j = 0; j < ws.size() && !have_inner; ++j)
        if (auto w = scan_one(ws[j])) {
            out.inner_index = j;
            out.inner = *w;
            have_inner = true;
        }
    if (!have_outer || !have_inner)
        throw ConsistencyError("no power/Chebyshev witness found; data outside theorem");
    return out;
}

}  // namespace pmp
