#include "pmp/decompose.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pmp/parallel.hpp"

namespace pmp {

std::pair<Poly, LinearMap> normalize_inner(const Poly& b) {
    if (b.degree() < 1) throw DegreeError("normalize_inner requires deg B >= 1");
    LinearMap l(Rational(1) / b.lc(), -b.constant_term() / b.lc());
    return {l.apply_outer(b), l};
}

namespace {

// S with S(0) = 1 and S^e = G mod t^prec, G(0) = 1, from the recurrence of
// e G S' = G' S.
std::vector<Rational> series_nth_root(const std::vector<Rational>& g, long e,
                                      std::size_t prec) {
    std::vector<Rational> s(prec, Rational(0));
    s[0] = 1;
    auto gx = [&](std::size_t i) { return i < g.size() ? g[i] : Rational(0); };
    for (std::size_t j = 1; j < prec; ++j) {
        Rational acc(0);
        for (std::size_t i = 1; i <= j; ++i) acc += Rational(long(i)) * gx(i) * s[j - i];
        for (std::size_t l = 1; l < j; ++l) acc -= Rational(e) * Rational(long(l)) * s[l] * gx(j - l);
        s[j] = acc / Rational(e * long(j));
    }
    return s;
}

void check_factor_degree(long d, long n) {
    if (d < 1 || d > n || n % d != 0)
        throw DegreeError("factor degree must divide deg F");
}

}  // namespace

std::optional<Poly> left_quotient(const Poly& f, const Poly& b) {
    if (b.degree() < 1) throw DegreeError("left_quotient requires deg B >= 1");
    if (f.degree() >= 1) check_factor_degree(b.degree(), f.degree());
    std::vector<Rational> digits;
    Poly r = f;
    while (true) {
        auto [q, rem] = divmod(r, b);
        if (rem.degree() > 0) return std::nullopt;
        digits.push_back(rem.constant_term());
        if (q.is_zero()) break;
        r = std::move(q);
    }
    return Poly::from_coeffs(std::move(digits));
}

std::optional<DecompPair> right_factor(const Poly& f, long d) {
    if (f.degree() < 1) throw DegreeError("right_factor requires deg F >= 1");
    check_factor_degree(d, f.degree());
    const long n = f.degree();
    const long e = n / d;
    // reversal of F / lc(F), truncated to d terms
    std::vector<Rational> g(d);
    for (long j = 0; j < d; ++j) g[j] = f.coeff(n - j) / f.lc();
    std::vector<Rational> s = series_nth_root(g, e, d);
    std::vector<Rational> bc(d + 1, Rational(0));
    bc[d] = 1;
    for (long j = 1; j < d; ++j) bc[d - j] = s[j];
    Poly b = Poly::from_coeffs(std::move(bc));
    auto a = left_quotient(f, b);
    if (!a) return std::nullopt;
    return DecompPair{std::move(*a), std::move(b)};
}

std::optional<Poly> inner_quotient(const Poly& f, const Poly& a) {
    if (a.degree() < 1) throw DegreeError("inner_quotient requires deg A >= 1");
    if (f.degree() < 1) throw DegreeError("inner_quotient requires deg F >= 1");
    check_factor_degree(a.degree(), f.degree());
    const long n = f.degree();
    const long e = a.degree();
    const long d = n / e;
    if (e == 1) {
        // A = a1 z + a0: B = (F - a0)/a1
        return (f - Poly(a.constant_term())).scaled(1 / a.coeff(1));
    }
    Rational rho = f.lc() / a.lc();
    auto root = nth_root_rational(rho, e);
    if (!root) return std::nullopt;
    std::vector<Rational> branches{*root};
    if (e % 2 == 0 && !is_zero(*root)) branches.push_back(-*root);
    for (const Rational& beta_d : branches) {
        std::vector<Rational> bc(d + 1, Rational(0));
        bc[d] = beta_d;
        Rational denom = Rational(e) * a.lc() * pow_rational(beta_d, e - 1);
        for (long j = 1; j <= d; ++j) {
            Poly cur = compose(a, Poly::from_coeffs(std::vector<Rational>(bc)));
            Rational delta = f.coeff(n - j) - cur.coeff(n - j);
            bc[d - j] = delta / denom;
        }
        Poly b = Poly::from_coeffs(std::move(bc));
        if (compose(a, b) == f) return b;
    }
    return std::nullopt;
}

std::map<long, std::optional<Poly>> all_right_factors(const Poly& f) {
    if (f.degree() < 1) throw DegreeError("all_right_factors requires deg F >= 1");
    const long n = f.degree();
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::optional<Poly>> results(divisors.size());
    const long m = static_cast<long>(divisors.size());
    auto run = [&](long i) {
        auto rf = right_factor(f, divisors[i]);
        if (rf) results[i] = std::move(rf->inner);
    };
#ifdef _OPENMP
    if (exec::parallel_enabled() && divisors.size() >= exec::kLoopCutoff && n > 32) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < m; ++i) run(i);
    } else
#endif
    {
        for (long i = 0; i < m; ++i) run(i);
    }
    std::map<long, std::optional<Poly>> out;
    for (long i = 0; i < m; ++i) out.emplace(divisors[i], std::move(results[i]));
    return out;
}

std::optional<std::pair<Poly, std::vector<Poly>>> common_right_component(
    const std::vector<Poly>& ws, long d) {
    if (ws.empty()) throw DegreeError("common_right_component needs factors");
    for (const Poly& w : ws) check_factor_degree(d, w.degree());
    std::optional<Poly> z;
    for (const Poly& w : ws) {
        auto rf = right_factor(w, d);
        if (!rf) return std::nullopt;
        if (!z)
            z = std::move(rf->inner);
        else if (!(*z == rf->inner))
            return std::nullopt;  // per-degree factors are unique, so must agree
    }
    std::vector<Poly> quotients;
    quotients.reserve(ws.size());
    for (const Poly& w : ws) {
        auto q = left_quotient(w, *z);
        if (!q) return std::nullopt;
        quotients.push_back(std::move(*q));
    }
    return std::make_pair(std::move(*z), std::move(quotients));
}

ReducedTuple reduce_coprime(const std::vector<Poly>& ps, const std::vector<Poly>& ws) {
    if (ps.size() != ws.size() || ps.size() < 2)
        throw DegreeError("reduce_coprime needs r >= 2 matched pairs");
    Poly f = compose(ps[0], ws[0]);
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (!(compose(ps[i], ws[i]) == f))
            throw HypothesisViolation("composites P_i o W_i are not all equal");

    long gp = 0, gw = 0;
    for (const Poly& p : ps) gp = std::gcd(gp, static_cast<long>(p.degree()));
    for (const Poly& w : ws) gw = std::gcd(gw, static_cast<long>(w.degree()));
    if (gp == 0 || gw == 0)
        throw DegreeError("reduce_coprime requires nonconstant factors");

    ReducedTuple out;
    if (gw == 1) {
        out.V = Poly::variable();
        out.w_tilde = ws;
    } else {
        auto crc = common_right_component(ws, gw);
        if (!crc)
            throw ConsistencyError("gcd-degree common inner factor is missing");
        out.V = std::move(crc->first);
        out.w_tilde = std::move(crc->second);
    }
    if (gp == 1) {
        out.U = Poly::variable();
        out.p_tilde = ps;
    } else {
        // P~_i is the unique quotient of the common composite factor C by
        // W~_i o V; quotients of P_i by U alone are not unique when U has
        // inner symmetries, so they cannot be chosen independently.
        auto rf = right_factor(f, f.degree() / gp);
        if (!rf) throw ConsistencyError("gcd-degree outer factor is missing");
        out.U = std::move(rf->outer);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            auto q = left_quotient(rf->inner, compose(out.w_tilde[i], out.V));
            if (!q) throw ConsistencyError("outer factor does not divide P_i");
            out.p_tilde.push_back(std::move(*q));
        }
    }
    Poly reduced = compose(out.p_tilde[0], out.w_tilde[0]);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!(compose(out.U, out.p_tilde[i]) == ps[i]) ||
            !(compose(out.p_tilde[i], out.w_tilde[i]) == reduced))
            throw ConsistencyError("reduced composites disagree");
    return out;
}

}  // namespace pmp
