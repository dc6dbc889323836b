#include "pmp/moment_problem.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pmp/composition_span.hpp"
#include "pmp/parallel.hpp"
#include "pmp/ritt_forms.hpp"

namespace pmp {

// ---------- endpoint scalars ----------

bool scalar_is_zero(const EndScalar& v) {
    return std::visit([](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
            return is_zero(x);
        else
            return x.is_zero();
    }, v);
}

namespace {
EndScalar promote_like(const EndScalar& like, const Rational& r) {
    if (std::holds_alternative<FieldElement>(like))
        return FieldElement::from_rational(std::get<FieldElement>(like).field(), r);
    return r;
}
}  // namespace

bool scalar_equal(const EndScalar& a, const EndScalar& b) {
    if (a.index() != b.index()) {
        if (std::holds_alternative<Rational>(a))
            return scalar_equal(promote_like(b, std::get<Rational>(a)), b);
        return scalar_equal(a, promote_like(a, std::get<Rational>(b)));
    }
    if (std::holds_alternative<Rational>(a))
        return std::get<Rational>(a) == std::get<Rational>(b);
    return std::get<FieldElement>(a) == std::get<FieldElement>(b);
}

EndScalar scalar_neg(const EndScalar& v) {
    return std::visit([](const auto& x) -> EndScalar { return -x; }, v);
}

EndScalar scalar_pow(const EndScalar& v, unsigned long e) {
    if (std::holds_alternative<Rational>(v))
        return pow_rational(std::get<Rational>(v), e);
    return std::get<FieldElement>(v).pow(e);
}

EndScalar eval_at_scalar(const Poly& p, const EndScalar& x) {
    if (std::holds_alternative<Rational>(x))
        return eval_poly(p, std::get<Rational>(x));
    return eval_in_field(p, std::get<FieldElement>(x));
}

std::string to_string(const EndScalar& v) {
    if (std::holds_alternative<Rational>(v)) return to_string(std::get<Rational>(v));
    return to_string(std::get<FieldElement>(v));
}

// ---------- endpoints ----------

Endpoints Endpoints::rationals(Rational a, Rational b) {
    if (a == b) throw EndpointError("endpoints must be distinct");
    Endpoints e;
    e.ra_ = std::move(a);
    e.rb_ = std::move(b);
    return e;
}

Endpoints Endpoints::nodes(NodeAngle a, NodeAngle b) {
    std::int64_t M = std::lcm(a.N, b.N);
    NodeAngle ca = make_node(a.k * (M / a.N), M);
    NodeAngle cb = make_node(b.k * (M / b.N), M);
    if (ca.k == cb.k) throw EndpointError("endpoints must be distinct");
    Endpoints e;
    e.na_ = ca;
    e.nb_ = cb;
    e.field_ = NumberField::two_cos_field(M);
    e.ea_ = node_embed(ca, e.field_);
    e.eb_ = node_embed(cb, e.field_);
    return e;
}

EndScalar Endpoints::value_a() const {
    if (is_node()) return *ea_;
    return ra_;
}
EndScalar Endpoints::value_b() const {
    if (is_node()) return *eb_;
    return rb_;
}
EndScalar Endpoints::eval_a(const Poly& w) const { return eval_at_scalar(w, value_a()); }
EndScalar Endpoints::eval_b(const Poly& w) const { return eval_at_scalar(w, value_b()); }

// ---------- moments ----------

EndScalar moment(const Poly& p, const Poly& q, const Endpoints& e, long k) {
    if (k < 0) throw DegreeError("moment order must be nonnegative");
    Poly integrand = pow_poly(p, static_cast<unsigned long>(k)) * derivative(q);
    Poly f = antiderivative(integrand);
    EndScalar fb = e.eval_b(f);
    EndScalar fa = e.eval_a(f);
    if (std::holds_alternative<Rational>(fb))
        return std::get<Rational>(fb) - std::get<Rational>(fa);
    return std::get<FieldElement>(fb) - std::get<FieldElement>(fa);
}

CheckedCertificate moments_vanish(const Poly& p, const Poly& q, const Endpoints& e,
                                  long K) {
    if (K < 0) throw DegreeError("K must be nonnegative");
    CheckedCertificate cert;
    cert.K = K;
    cert.values.assign(K + 1, EndScalar(Rational(0)));
    auto run = [&](long k) { cert.values[k] = moment(p, q, e, k); };
#ifdef _OPENMP
    if (exec::parallel_enabled() && K + 1 >= static_cast<long>(exec::kLoopCutoff)) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k <= K; ++k) run(k);
    } else
#endif
    {
        for (long k = 0; k <= K; ++k) run(k);
    }
    cert.all_zero = std::all_of(cert.values.begin(), cert.values.end(), scalar_is_zero);
    return cert;
}

StructuralCertificate certify_reducible(const Poly& p, const Poly& q, const Poly& w,
                                        const Endpoints& e) {
    if (w.degree() < 1) throw NotReducible("W must be nonconstant");
    std::optional<Poly> pt;
    if (p.degree() >= 1 && p.degree() % w.degree() == 0) pt = left_quotient(p, w);
    if (!pt) throw NotReducible("P is not a composition through W");
    std::optional<Poly> qt;
    if (q.degree() < 1)
        qt = q;
    else if (q.degree() % w.degree() == 0)
        qt = left_quotient(q, w);
    if (!qt) throw NotReducible("Q is not a composition through W");
    if (!scalar_equal(e.eval_a(w), e.eval_b(w)))
        throw NotReducible("W(a) != W(b)");
    StructuralCertificate cert;
    cert.terms.push_back({std::move(*qt), w});
    cert.p_quotients.push_back(std::move(*pt));
    return cert;
}

// ---------- merge ----------

MergeResult merge_reducible(const Poly& p, std::vector<ReducibleTerm> terms,
                            const Endpoints& e) {
    for (const auto& t : terms) {
        if (t.W.degree() < 1 ||
            (p.degree() % t.W.degree() != 0) || !left_quotient(p, t.W))
            throw HypothesisViolation("term factor is not a right factor of P");
        if (!scalar_equal(e.eval_a(t.W), e.eval_b(t.W)))
            throw HypothesisViolation("term violates W(a) = W(b)");
    }
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < terms.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < terms.size() && !merged; ++j) {
                long g = std::gcd(static_cast<long>(terms[i].W.degree()),
                                  static_cast<long>(terms[j].W.degree()));
                for (long d = g; d >= 2 && !merged; --d) {
                    if (g % d != 0) continue;
                    auto crc = common_right_component({terms[i].W, terms[j].W}, d);
                    if (!crc) continue;
                    const Poly& z = crc->first;
                    if (!scalar_equal(e.eval_a(z), e.eval_b(z))) continue;
                    Poly v = compose(terms[i].V, crc->second[0]) +
                             compose(terms[j].V, crc->second[1]);
                    terms[i] = ReducibleTerm{std::move(v), z};
                    terms.erase(terms.begin() + j);
                    merged = true;
                }
            }
        }
    }
    MergeResult out;
    out.length_warning = terms.size() > 3;
    out.terms = std::move(terms);
    return out;
}

// ---------- classifier ----------

namespace {

std::vector<long> divisors_ascending(long g) {
    std::vector<long> ds;
    for (long d = 1; d <= g; ++d)
        if (g % d == 0) ds.push_back(d);
    return ds;
}

// Drop vanished terms and move constant summands into the first term.
bool normalize_terms(std::vector<ReducibleTerm>& terms) {
    Rational shift(0);
    std::vector<ReducibleTerm> keep;
    for (auto& t : terms) {
        if (t.V.is_zero())
            continue;
        else if (t.V.is_constant())
            shift += t.V.constant_term();
        else
            keep.push_back(std::move(t));
    }
    if (keep.empty()) return false;
    if (!is_zero(shift)) keep[0].V += Poly(shift);
    terms = std::move(keep);
    return true;
}

struct MatchInput {
    const Poly& p;
    const Endpoints& e;
};

std::optional<Case2> case2_match(const MatchInput& in,
                                 const std::vector<ReducibleTerm>& t) {
    long g = std::gcd(static_cast<long>(t[0].W.degree()),
                      static_cast<long>(t[1].W.degree()));
    for (long d : divisors_ascending(g)) {
        auto crc = common_right_component({t[0].W, t[1].W}, d);
        if (!crc) continue;
        const Poly& z = crc->first;
        for (int flip = 0; flip < 2; ++flip) {
            const Poly& ga = crc->second[flip];
            const Poly& gb = crc->second[1 - flip];
            const Poly& va = t[flip].V;
            const Poly& vb = t[1 - flip].V;
            if (ga.degree() < 2) continue;  // n > 1 required
            auto wit = power_equiv(ga);
            if (!wit) continue;
            long n = wit->n;
            Poly w = compose(wit->nu->to_poly(), z);
            Poly gq = compose(gb, wit->nu->inverse().to_poly());
            Rational beta = gq.constant_term();
            Poly h = gq - Poly(beta);
            long s = -1;
            for (int i = 0; i <= h.degree(); ++i) {
                if (is_zero(h.coeff(i))) continue;
                if (s < 0)
                    s = i;
                else if ((i - s) % n != 0) {
                    s = -2;
                    break;
                }
            }
            if (s < 1 || std::gcd(s, n) != 1) continue;
            std::vector<Rational> rc((h.degree() - s) / n + 1, Rational(0));
            for (int i = 0; i <= h.degree(); ++i)
                if (!is_zero(h.coeff(i))) rc[(i - s) / n] = h.coeff(i);
            Poly r = Poly::from_coeffs(std::move(rc));
            EndScalar xan = scalar_pow(in.e.eval_a(w), n);
            EndScalar xbn = scalar_pow(in.e.eval_b(w), n);
            if (!scalar_equal(xan, xbn)) continue;
            if (!scalar_is_zero(eval_at_scalar(r, xan))) continue;
            Poly core = compose(pow_poly(r, n), Poly::monomial(Rational(1), n))
                            .shifted(s * n);
            auto u = left_quotient(in.p, compose(core, w));
            if (!u) continue;
            Case2 out;
            out.V1 = compose(va, wit->mu->to_poly());
            out.V2 = compose(vb, Poly::from_coeffs({beta, Rational(1)}));
            out.R = std::move(r);
            out.W = std::move(w);
            out.U = std::move(*u);
            out.s = s;
            out.n = n;
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Case3> case3_match(const MatchInput& in,
                                 const std::vector<ReducibleTerm>& t) {
    long g = std::gcd(static_cast<long>(t[0].W.degree()),
                      static_cast<long>(t[1].W.degree()));
    for (long d : divisors_ascending(g)) {
        auto crc = common_right_component({t[0].W, t[1].W}, d);
        if (!crc) continue;
        const Poly& z = crc->first;
        for (int flip = 0; flip < 2; ++flip) {
            const Poly& ga = crc->second[flip];
            const Poly& gb = crc->second[1 - flip];
            const Poly& va = t[flip].V;
            const Poly& vb = t[1 - flip].V;
            if (ga.degree() < 2 || gb.degree() < 2) continue;
            long n = ga.degree(), m = gb.degree();
            if (std::gcd(n, m) != 1) continue;
            std::optional<std::tuple<LinearMap, long, LinearMap>> dec;
            try {
                dec = cheb_decompose(ga);
            } catch (const Error&) {
                continue;
            }
            if (!dec) continue;
            auto [sigma1, k1, mu] = *dec;
            if (k1 != n) continue;
            Poly w = compose(mu.to_poly(), z);
            Poly gq = compose(gb, mu.inverse().to_poly());
            Poly tm = chebyshev(m);
            Rational alpha = gq.lc() / tm.lc();
            Poly rest = gq - tm.scaled(alpha);
            if (rest.degree() > 0) continue;
            LinearMap sigma2(alpha, rest.constant_term());
            EndScalar xa = in.e.eval_a(w);
            EndScalar xb = in.e.eval_b(w);
            if (!scalar_equal(eval_at_scalar(chebyshev(n), xa),
                              eval_at_scalar(chebyshev(n), xb)))
                continue;
            if (!scalar_equal(eval_at_scalar(tm, xa), eval_at_scalar(tm, xb)))
                continue;
            auto u = left_quotient(in.p, compose(chebyshev(n * m), w));
            if (!u) continue;
            Case3 out;
            out.V1 = compose(va, sigma1.to_poly());
            out.V2 = compose(vb, sigma2.to_poly());
            out.U = std::move(*u);
            out.W = std::move(w);
            out.n = n;
            out.m = m;
            return out;
        }
    }
    return std::nullopt;
}

// R with h = z R(z^2); absent when h has a nonzero even-exponent coefficient.
std::optional<Poly> odd_part_only(const Poly& h) {
    if (h.is_zero()) return Poly{};
    std::vector<Rational> rc(h.degree() / 2 + 1, Rational(0));
    for (int i = 0; i <= h.degree(); ++i) {
        if (is_zero(h.coeff(i))) continue;
        if (i % 2 == 0) return std::nullopt;
        rc[(i - 1) / 2] = h.coeff(i);
    }
    return Poly::from_coeffs(std::move(rc));
}

std::optional<Case4> case4_match(const MatchInput& in,
                                 const std::vector<ReducibleTerm>& t) {
    long g = std::gcd(std::gcd(static_cast<long>(t[0].W.degree()),
                               static_cast<long>(t[1].W.degree())),
                      static_cast<long>(t[2].W.degree()));
    for (long d : divisors_ascending(g)) {
        auto crc = common_right_component({t[0].W, t[1].W, t[2].W}, d);
        if (!crc) continue;
        const Poly& z = crc->first;
        // exactly one quotient of odd degree carries the zR(z^2) o T_mn slot
        std::vector<std::size_t> evens, odds;
        for (std::size_t i = 0; i < 3; ++i)
            (crc->second[i].degree() % 2 == 0 ? evens : odds).push_back(i);
        if (odds.size() != 1) continue;
        std::size_t e1 = evens[0], e2 = evens[1], o = odds[0];
        const Poly& g1 = crc->second[e1];
        const Poly& g2 = crc->second[e2];
        const Poly& g3 = crc->second[o];
        long n = g1.degree() / 2, m = g2.degree() / 2;
        if (n <= 1 || m <= 1 || n % 2 == 0 || m % 2 == 0 || std::gcd(n, m) != 1)
            continue;
        if (g3.degree() % (n * m) != 0) continue;
        std::optional<std::tuple<LinearMap, long, LinearMap>> dec;
        try {
            dec = cheb_decompose(g1);
        } catch (const Error&) {
            continue;
        }
        if (!dec) continue;
        auto [sigma1, k1, mu] = *dec;
        if (k1 != 2 * n) continue;
        Poly w = compose(mu.to_poly(), z);
        Poly gq2 = compose(g2, mu.inverse().to_poly());
        Poly t2m = chebyshev(2 * m);
        Rational alpha = gq2.lc() / t2m.lc();
        Poly rest = gq2 - t2m.scaled(alpha);
        if (rest.degree() > 0) continue;
        LinearMap sigma2(alpha, rest.constant_term());
        Poly gq3 = compose(g3, mu.inverse().to_poly());
        if (gq3.degree() % (n * m) != 0) continue;
        auto y = left_quotient(gq3, chebyshev(n * m));
        if (!y) continue;
        Rational beta = y->constant_term();
        auto r = odd_part_only(*y - Poly(beta));
        if (!r) continue;
        if (!is_zero(eval_poly(*r, Rational(1)))) continue;  // R(1) = 0
        EndScalar xa = in.e.eval_a(w);
        EndScalar xb = in.e.eval_b(w);
        Poly tn = chebyshev(n), tm = chebyshev(m);
        if (!scalar_equal(eval_at_scalar(tn, xa),
                          scalar_neg(eval_at_scalar(tn, xb))))
            continue;
        if (!scalar_equal(eval_at_scalar(tm, xa),
                          scalar_neg(eval_at_scalar(tm, xb))))
            continue;
        if (scalar_equal(xa, scalar_neg(xb))) continue;  // W(a) != -W(b)
        Poly core = compose(pow_poly(*r, 2), Poly::monomial(Rational(1), 2)).shifted(2);
        auto u = left_quotient(in.p, compose(core, compose(chebyshev(n * m), w)));
        if (!u) continue;
        Case4 out;
        out.V1 = compose(t[e1].V, sigma1.to_poly());
        out.V2 = compose(t[e2].V, sigma2.to_poly());
        out.V3 = compose(t[o].V, Poly::from_coeffs({beta, Rational(1)}));
        out.U = std::move(*u);
        out.W = std::move(w);
        out.R = std::move(*r);
        out.n = n;
        out.m = m;
        return out;
    }
    return std::nullopt;
}

StructuralCertificate certificate_from_terms(const Poly& p,
                                             std::vector<ReducibleTerm> terms) {
    StructuralCertificate cert;
    for (auto& t : terms) {
        auto q = left_quotient(p, t.W);
        if (!q) throw ConsistencyError("certificate term is not a factor of P");
        cert.p_quotients.push_back(std::move(*q));
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

}  // namespace

bool verify_case1(const Poly& p, const Poly& q, const Endpoints& e, const Case1& c) {
    return compose(c.p_tilde, c.W) == p && compose(c.q_tilde, c.W) == q &&
           c.W.degree() >= 2 && scalar_equal(e.eval_a(c.W), e.eval_b(c.W));
}

bool verify_case2(const Poly& p, const Poly& q, const Endpoints& e, const Case2& c) {
    if (c.n <= 1 || c.s < 1 || std::gcd(c.s, c.n) != 1) return false;
    Poly zn = Poly::monomial(Rational(1), c.n);
    Poly zsr = compose(c.R, zn).shifted(c.s);
    Poly core = compose(pow_poly(c.R, c.n), zn).shifted(c.s * c.n);
    if (!(compose(c.U, compose(core, c.W)) == p)) return false;
    if (!(compose(c.V1, compose(zn, c.W)) + compose(c.V2, compose(zsr, c.W)) == q))
        return false;
    EndScalar xan = scalar_pow(e.eval_a(c.W), c.n);
    EndScalar xbn = scalar_pow(e.eval_b(c.W), c.n);
    return scalar_equal(xan, xbn) && scalar_is_zero(eval_at_scalar(c.R, xan));
}

bool verify_case3(const Poly& p, const Poly& q, const Endpoints& e, const Case3& c) {
    if (c.n <= 1 || c.m <= 1 || std::gcd(c.n, c.m) != 1) return false;
    Poly tn = chebyshev(c.n), tm = chebyshev(c.m);
    if (!(compose(c.U, compose(chebyshev(c.n * c.m), c.W)) == p)) return false;
    if (!(compose(c.V1, compose(tn, c.W)) + compose(c.V2, compose(tm, c.W)) == q))
        return false;
    EndScalar xa = e.eval_a(c.W), xb = e.eval_b(c.W);
    return scalar_equal(eval_at_scalar(tn, xa), eval_at_scalar(tn, xb)) &&
           scalar_equal(eval_at_scalar(tm, xa), eval_at_scalar(tm, xb));
}

bool verify_case4(const Poly& p, const Poly& q, const Endpoints& e, const Case4& c) {
    if (c.n <= 1 || c.m <= 1 || c.n % 2 == 0 || c.m % 2 == 0 ||
        std::gcd(c.n, c.m) != 1)
        return false;
    if (!is_zero(eval_poly(c.R, Rational(1)))) return false;
    Poly z2 = Poly::monomial(Rational(1), 2);
    Poly core = compose(pow_poly(c.R, 2), z2).shifted(2);
    Poly tmn = chebyshev(c.n * c.m);
    if (!(compose(c.U, compose(core, compose(tmn, c.W))) == p)) return false;
    Poly w3 = compose(compose(c.R, z2).shifted(1), tmn);
    Poly q_rebuilt = compose(c.V1, compose(chebyshev(2 * c.n), c.W)) +
                     compose(c.V2, compose(chebyshev(2 * c.m), c.W)) +
                     compose(c.V3, compose(w3, c.W));
    if (!(q_rebuilt == q)) return false;
    EndScalar xa = e.eval_a(c.W), xb = e.eval_b(c.W);
    Poly tn = chebyshev(c.n), tm = chebyshev(c.m);
    return scalar_equal(eval_at_scalar(tn, xa), scalar_neg(eval_at_scalar(tn, xb))) &&
           scalar_equal(eval_at_scalar(tm, xa), scalar_neg(eval_at_scalar(tm, xb))) &&
           !scalar_equal(xa, scalar_neg(xb));
}

std::optional<Case1> try_case1(const Poly& p, const Poly& q, const Endpoints& e) {
    auto factors = all_right_factors(p);
    for (const auto& [d, w] : factors) {
        if (d < 2 || !w) continue;
        if (!scalar_equal(e.eval_a(*w), e.eval_b(*w))) continue;
        if (q.degree() < 1 || q.degree() % d != 0) continue;
        auto qt = left_quotient(q, *w);
        if (!qt) continue;
        auto pt = left_quotient(p, *w);
        if (!pt) throw ConsistencyError("right factor lost its left quotient");
        return Case1{std::move(*pt), std::move(*qt), *w};
    }
    return std::nullopt;
}

Classification classify_solution(const Poly& p, const Poly& q, const Endpoints& e,
                                 long K) {
    if (p.degree() < 1 || q.degree() < 1)
        throw HypothesisViolation("classification requires nonconstant P and Q");
    if (K < 0) K = q.degree() + 2;

    Classification out;
    auto factors = all_right_factors(p);
    std::vector<std::pair<long, Poly>> kept;
    for (const auto& [d, w] : factors) {
        if (d < 2 || !w) continue;
        if (scalar_equal(e.eval_a(*w), e.eval_b(*w))) kept.emplace_back(d, *w);
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Case 1: a single factor carries Q.
    for (const auto& [d, w] : kept) {
        if (q.degree() % d != 0) continue;
        auto qt = left_quotient(q, w);
        if (!qt) continue;
        auto pt = left_quotient(p, w);
        if (!pt) throw ConsistencyError("right factor lost its left quotient");
        out.case_number = 1;
        out.case1 = Case1{*pt, *qt, w};
        if (!verify_case1(p, q, e, *out.case1))
            throw ConsistencyError("case 1 witnesses failed re-verification");
        out.certificate = certificate_from_terms(p, {{*qt, w}});
        return out;
    }

    // Subsets of the surviving factors, size 2 then 3, smallest total degree
    // first; each feasible span solution is merged and matched.
    MatchInput in{p, e};
    for (std::size_t size : {std::size_t{2}, std::size_t{3}}) {
        if (kept.size() < size) continue;
        std::vector<std::vector<std::size_t>> combos;
        std::vector<std::size_t> idx(size);
        std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t start,
                                                                std::size_t pos) {
            if (pos == size) {
                combos.push_back(idx);
                return;
            }
            for (std::size_t i = start; i < kept.size(); ++i) {
                idx[pos] = i;
                gen(i + 1, pos + 1);
            }
        };
        gen(0, 0);
        std::stable_sort(combos.begin(), combos.end(),
                         [&](const auto& a, const auto& b) {
                             long da = 0, db = 0;
                             for (auto i : a) da += kept[i].first;
                             for (auto i : b) db += kept[i].first;
                             return da < db;
                         });
        for (const auto& combo : combos) {
            std::vector<Poly> ws;
            for (auto i : combo) ws.push_back(kept[i].second);
            auto vs = express_in_composition_span(q, ws);
            if (!vs) continue;
            std::vector<ReducibleTerm> terms;
            for (std::size_t i = 0; i < ws.size(); ++i)
                terms.push_back({(*vs)[i], ws[i]});
            if (!normalize_terms(terms)) continue;
            auto merged = merge_reducible(p, std::move(terms), e);
            if (merged.length_warning) continue;
            auto& t = merged.terms;
            if (t.size() == 1) {
                auto pt = left_quotient(p, t[0].W);
                if (!pt) throw ConsistencyError("merged factor lost its quotient");
                out.case_number = 1;
                out.case1 = Case1{*pt, t[0].V, t[0].W};
                if (!verify_case1(p, q, e, *out.case1))
                    throw ConsistencyError("case 1 witnesses failed re-verification");
                out.certificate = certificate_from_terms(p, std::move(t));
                return out;
            }
            if (t.size() == 2) {
                if (auto c3 = case3_match(in, t)) {
                    out.case_number = 3;
                    out.case3 = std::move(c3);
                    if (!verify_case3(p, q, e, *out.case3))
                        throw ConsistencyError("case 3 witnesses failed re-verification");
                    out.certificate = certificate_from_terms(p, std::move(t));
                    return out;
                }
                if (auto c2 = case2_match(in, t)) {
                    out.case_number = 2;
                    out.case2 = std::move(c2);
                    if (!verify_case2(p, q, e, *out.case2))
                        throw ConsistencyError("case 2 witnesses failed re-verification");
                    out.certificate = certificate_from_terms(p, std::move(t));
                    return out;
                }
            }
            if (t.size() == 3) {
                if (auto c4 = case4_match(in, t)) {
                    out.case_number = 4;
                    out.case4 = std::move(c4);
                    if (!verify_case4(p, q, e, *out.case4))
                        throw ConsistencyError("case 4 witnesses failed re-verification");
                    out.certificate = certificate_from_terms(p, std::move(t));
                    return out;
                }
            }
        }
    }

    CheckedCertificate checked = moments_vanish(p, q, e, K);
    out.case_number = 0;
    out.status = checked.all_zero ? UnclassifiedStatus::kBeyondClassifier
                                  : UnclassifiedStatus::kNotASolution;
    out.certificate = std::move(checked);
    return out;
}

// ---------- Chebyshev endpoint checks ----------

SkunPartA skun_check_a(const std::vector<long>& moduli, const Endpoints& e) {
    if (moduli.size() != 3)
        throw HypothesisViolation("part a takes exactly three moduli");
    EndScalar a = e.value_a(), b = e.value_b();
    for (long m : moduli) {
        if (m < 1) throw HypothesisViolation("moduli must be positive");
        Poly t = chebyshev(m);
        if (!scalar_equal(eval_at_scalar(t, a), eval_at_scalar(t, b)))
            throw HypothesisViolation("T_m(a) = T_m(b) fails for a given modulus");
    }
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        long l = std::gcd(moduli[i], moduli[j]);
        Poly t = chebyshev(l);
        if (scalar_equal(eval_at_scalar(t, a), eval_at_scalar(t, b)))
            return SkunPartA{i, j, l};
    }
    throw ConsistencyError("no pair with T_gcd(a) = T_gcd(b); data outside lemma");
}

namespace {
void require_odd_coprime(long m1, long m2) {
    if (m1 < 1 || m2 < 1 || m1 % 2 == 0 || m2 % 2 == 0 || std::gcd(m1, m2) != 1)
        throw HypothesisViolation("moduli must be odd and coprime");
}
}  // namespace

SkunPartB skun_check_b(long m1, long m2, const Endpoints& e) {
    require_odd_coprime(m1, m2);
    EndScalar a = e.value_a();
    if (!scalar_is_zero(eval_at_scalar(chebyshev(m1), a)) ||
        !scalar_is_zero(eval_at_scalar(chebyshev(m2), a)))
        throw HypothesisViolation("T_m1(a) = T_m2(a) = 0 fails");
    return SkunPartB{scalar_is_zero(a)};
}

SkunPartC skun_check_c(long m1, long m2, const Endpoints& e) {
    require_odd_coprime(m1, m2);
    EndScalar a = e.value_a(), b = e.value_b();
    for (long m : {m1, m2}) {
        Poly t = chebyshev(m);
        if (!scalar_equal(eval_at_scalar(t, a), scalar_neg(eval_at_scalar(t, b))))
            throw HypothesisViolation("T_m(a) = -T_m(b) fails");
    }
    SkunPartC out;
    if (scalar_equal(a, scalar_neg(b))) {
        out.a_equals_minus_b = true;
        return out;
    }
    out.a_equals_minus_b = false;
    EndScalar v = eval_at_scalar(chebyshev(m1 * m2), a);
    for (long sign : {1, -1})
        if (scalar_equal(v, EndScalar(Rational(sign)))) {
            out.t_value = Rational(sign);
            return out;
        }
    throw ConsistencyError("neither disjunct of part c holds; data outside lemma");
}

// ---------- generators ----------

GeneratedSolution gen_case2(long n, long s, const Poly& R, const Poly& V1,
                            const Poly& V2, const Rational& a) {
    if (n <= 1) throw HypothesisViolation("case 2 requires n > 1");
    if (s < 1) throw HypothesisViolation("case 2 requires s >= 1");
    if (std::gcd(s, n) != 1) throw HypothesisViolation("GCD(s, n) must be 1");
    if (R.is_zero()) throw HypothesisViolation("R must be nonzero");
    if (n % 2 != 0)
        throw HypothesisViolation(
            "odd n has no real endpoint pair with a^n = b^n and a != b");
    if (is_zero(a)) throw HypothesisViolation("a must be nonzero");
    if (!is_zero(eval_poly(R, pow_rational(a, n))))
        throw HypothesisViolation("R(a^n) = 0 is required");

    Poly zn = Poly::monomial(Rational(1), n);
    Poly w2 = compose(R, zn).shifted(s);
    Poly pp = compose(pow_poly(R, n), zn).shifted(s * n);
    Poly qq = compose(V1, zn) + compose(V2, w2);
    if (qq.degree() < 1) throw HypothesisViolation("Q must be nonconstant");

    GeneratedSolution out{std::move(pp), std::move(qq),
                          Endpoints::rationals(a, -a), {}};
    out.certificate.terms = {{V1, zn}, {V2, w2}};
    for (const auto& t : out.certificate.terms) {
        auto quot = left_quotient(out.P, t.W);
        if (!quot) throw ConsistencyError("generator factor mismatch");
        out.certificate.p_quotients.push_back(std::move(*quot));
    }
    return out;
}

GeneratedSolution gen_case3(long n, long m, const Poly& V1, const Poly& V2,
                            const Endpoints& e) {
    if (n <= 1 || m <= 1 || std::gcd(n, m) != 1)
        throw HypothesisViolation("case 3 requires coprime n, m > 1");
    if (!e.is_node())
        throw EndpointError("case 3 generator requires Chebyshev-node endpoints");
    for (long k : {n, m}) {
        NodeRelation rel = node_relations(node_cheb_image(e.node_a(), k),
                                          node_cheb_image(e.node_b(), k));
        if (!rel.equal)
            throw HypothesisViolation("T_k(a) = T_k(b) fails at the given nodes");
    }
    Poly tn = chebyshev(n), tm = chebyshev(m);
    Poly qq = compose(V1, tn) + compose(V2, tm);
    if (qq.degree() < 1) throw HypothesisViolation("Q must be nonconstant");
    GeneratedSolution out{chebyshev(n * m), std::move(qq), e, {}};
    out.certificate.terms = {{V1, tn}, {V2, tm}};
    for (const auto& t : out.certificate.terms) {
        auto quot = left_quotient(out.P, t.W);
        if (!quot) throw ConsistencyError("generator factor mismatch");
        out.certificate.p_quotients.push_back(std::move(*quot));
    }
    return out;
}

std::vector<Poly> case4_identity_chain(long n, long m, const Poly& R) {
    Poly z2 = Poly::monomial(Rational(1), 2);
    Poly tmn = chebyshev(m * n);
    Poly r2 = pow_poly(R, 2);
    Poly half_shift = Poly::from_coeffs({make_rational(1, 2), make_rational(1, 2)});
    Poly h = half_shift * pow_poly(compose(R, half_shift), 2);
    std::vector<Poly> chain;
    chain.push_back(compose(compose(r2, z2).shifted(2), tmn));
    chain.push_back(compose(r2.shifted(1), compose(z2, tmn)));
    chain.push_back(compose(r2.shifted(1),
                            compose(half_shift, compose(chebyshev(2), tmn))));
    chain.push_back(compose(h, chebyshev(2 * m * n)));
    chain.push_back(compose(h, compose(chebyshev(m), chebyshev(2 * n))));
    chain.push_back(compose(h, compose(chebyshev(n), chebyshev(2 * m))));
    return chain;
}

GeneratedSolution gen_case4(long n, long m, const Poly& R, const Poly& V1,
                            const Poly& V2, const Poly& V3, const Endpoints& e) {
    if (n <= 1 || m <= 1 || n % 2 == 0 || m % 2 == 0 || std::gcd(n, m) != 1)
        throw HypothesisViolation("case 4 requires odd coprime n, m > 1");
    if (R.is_zero() || !is_zero(eval_poly(R, Rational(1))))
        throw HypothesisViolation("R(1) = 0 is required");
    if (!e.is_node())
        throw EndpointError("case 4 generator requires Chebyshev-node endpoints");
    for (long k : {n, m}) {
        NodeRelation rel = node_relations(node_cheb_image(e.node_a(), k),
                                          node_cheb_image(e.node_b(), k));
        if (!rel.negatives)
            throw HypothesisViolation("T_k(a) = -T_k(b) fails at the given nodes");
    }
    if (node_relations(e.node_a(), e.node_b()).negatives)
        throw HypothesisViolation("a = -b is excluded in case 4");

    std::vector<Poly> chain = case4_identity_chain(n, m, R);
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!(chain[i] == chain[0]))
            throw ConsistencyError("triple-decomposition identity chain broke");
    Poly w3 = compose(compose(R, Poly::monomial(Rational(1), 2)).shifted(1),
                      chebyshev(m * n));
    // T_mn(a), T_mn(b) are +-1 here, so zR(z^2) sends both endpoints to 0.
    for (const NodeAngle& node : {e.node_a(), e.node_b()}) {
        NodeAngle img = node_cheb_image(node, m * n);
        if (img.k != 0 && img.k != img.N)
            throw ConsistencyError("T_mn endpoint value is not +-1");
    }
    Poly qq = compose(V1, chebyshev(2 * n)) + compose(V2, chebyshev(2 * m)) +
              compose(V3, w3);
    if (qq.degree() < 1) throw HypothesisViolation("Q must be nonconstant");
    GeneratedSolution out{chain[0], std::move(qq), e, {}};
    out.certificate.terms = {{V1, chebyshev(2 * n)}, {V2, chebyshev(2 * m)}, {V3, w3}};
    for (const auto& t : out.certificate.terms) {
        auto quot = left_quotient(out.P, t.W);
        if (!quot) throw ConsistencyError("generator factor mismatch");
        out.certificate.p_quotients.push_back(std::move(*quot));
    }
    return out;
}

// ---------- remark ----------

namespace {
bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

RemarkReport verify_remark_example(long m, long n, const Poly& R) {
    if (m == n || m <= 1 || n <= 1 || m % 2 == 0 || n % 2 == 0 ||
        std::gcd(m, n) != 1)
        throw HypothesisViolation("remark requires distinct odd coprime m, n > 1");
    if (R.is_zero() || !is_zero(eval_poly(R, Rational(1))))
        throw HypothesisViolation("R(1) = 0 is required");

    RemarkReport report;
    report.primality_hypothesis_met =
        is_prime(m) && is_prime(n) && m > 3 && n > 3;

    const long N = m * n;
    std::optional<Endpoints> endpoints;
    for (long k1 = 1; k1 < N && !endpoints; ++k1) {
        for (long k2 = 1; k2 < N && !endpoints; ++k2) {
            NodeAngle a = make_node(k1, N), b = make_node(k2, N);
            if (a.k == b.k) continue;
            if (node_relations(a, b).negatives) continue;
            bool ok = true;
            for (long mod : {n, m})
                if (!node_relations(node_cheb_image(a, mod), node_cheb_image(b, mod))
                         .negatives)
                    ok = false;
            if (ok) endpoints = Endpoints::nodes(a, b);
        }
    }
    if (!endpoints)
        throw ConsistencyError("no endpoint pair satisfies the case-4 conditions");
    report.endpoints = *endpoints;

    Poly core =
        compose(pow_poly(R, 2), Poly::monomial(Rational(1), 2)).shifted(2);
    Poly p = compose(core, chebyshev(m * n));
    Poly w3 = compose(compose(R, Poly::monomial(Rational(1), 2)).shifted(1),
                      chebyshev(m * n));
    Poly q = chebyshev(2 * m) + chebyshev(2 * n) + w3;

    auto factors = all_right_factors(p);
    std::vector<std::pair<long, Poly>> kept;
    for (const auto& [d, w] : factors) {
        if (!w) continue;
        report.factor_degrees.push_back(d);
        if (d < 2) continue;
        if (scalar_equal(endpoints->eval_a(*w), endpoints->eval_b(*w)))
            kept.emplace_back(d, *w);
    }
    for (const auto& [d, w] : kept) report.endpoint_kept_degrees.push_back(d);

    report.two_term_impossible = true;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            bool feasible =
                express_in_composition_span(q, {kept[i].second, kept[j].second})
                    .has_value();
            report.pair_feasible.emplace_back(kept[i].first, kept[j].first, feasible);
            if (feasible) report.two_term_impossible = false;
        }

    const long d3 = (2 * R.degree() + 1) * m * n;
    std::vector<Poly> named;
    for (long want : {2 * n, 2 * m, d3}) {
        auto it = std::find_if(kept.begin(), kept.end(),
                               [&](const auto& kv) { return kv.first == want; });
        if (it == kept.end())
            throw ConsistencyError("expected factor degree missing from filter");
        named.push_back(it->second);
    }
    report.triple_feasible = express_in_composition_span(q, named).has_value();
    return report;
}

std::string validate_certificate(const StructuralCertificate& cert, const Poly& p,
                                 const Poly& q, const Endpoints& e) {
    if (cert.terms.empty()) return "certificate has no terms";
    if (cert.terms.size() != cert.p_quotients.size())
        return "terms and P-quotients differ in length";
    Poly sum;
    for (std::size_t i = 0; i < cert.terms.size(); ++i) {
        const auto& t = cert.terms[i];
        if (!(compose(cert.p_quotients[i], t.W) == p)) return "P factor mismatch";
        if (!scalar_equal(e.eval_a(t.W), e.eval_b(t.W))) return "W(a) != W(b)";
        sum += compose(t.V, t.W);
    }
    if (!(sum == q)) return "terms do not sum to Q";
    return "";
}

}  // namespace pmp
