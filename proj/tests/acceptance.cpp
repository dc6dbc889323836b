// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, each criterion checked against its stated runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pmp/composition_span.hpp"
#include "pmp/decompose.hpp"
#include "pmp/moment_problem.hpp"
#include "pmp/node_angle.hpp"
#include "pmp/ritt_forms.hpp"

using namespace pmp;

namespace {

Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly::from_coeffs(cs);
}

Poly random_poly(std::mt19937_64& rng, int degree, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Rational> cs(degree + 1);
    for (auto& c : cs) c = Rational(coeff(rng));
    while (is_zero(cs.back())) cs.back() = Rational(coeff(rng));
    return Poly::from_coeffs(std::move(cs));
}

LinearMap random_linear(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    Rational a(0);
    while (is_zero(a)) a = make_rational(num(rng), den(rng));
    return LinearMap(a, make_rational(num(rng), den(rng)));
}

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

// 1. Chebyshev algebra identities for n, m <= 12.
bool crit1(std::string&) {
    for (long n = 1; n <= 12; ++n)
        for (long m = 1; m <= 12; ++m)
            if (!(compose(chebyshev(n), chebyshev(m)) == chebyshev(n * m) &&
                  compose(chebyshev(m), chebyshev(n)) == chebyshev(n * m)))
                return false;
    Poly minus_z = P({0, -1});
    for (long n = 0; n <= 12; ++n) {
        Poly lhs = compose(chebyshev(n), minus_z);
        Poly rhs = n % 2 == 0 ? chebyshev(n) : -chebyshev(n);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// 2. Decomposition roundtrip on 300 random pairs.
bool crit2(std::string& detail) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(rng, 1 + int(rng() % 8));
        Poly b = random_poly(rng, 1 + int(rng() % 8));
        Poly f = compose(a, b);
        auto rf = right_factor(f, b.degree());
        if (!rf || !(compose(rf->outer, rf->inner) == f)) {
            detail = "roundtrip failed at instance " + std::to_string(i);
            return false;
        }
        auto lq = left_quotient(f, b);
        if (!lq || !(*lq == a)) {
            detail = "left_quotient disagreed at instance " + std::to_string(i);
            return false;
        }
        auto iq = inner_quotient(f, a);
        if (!iq || !(compose(a, *iq) == f)) {
            detail = "inner_quotient disagreed at instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 3. Theorem-style gcd reduction on 100 constructed multi-decompositions.
bool crit3(std::string& detail) {
    std::mt19937_64 rng(103);
    const std::vector<std::vector<long>> divisor_sets = {
        {2, 3}, {2, 3, 4}, {3, 4}, {2, 6}, {4, 6}, {2, 3, 6}, {6, 4}};
    for (int i = 0; i < 100; ++i) {
        const auto& as = divisor_sets[i % divisor_sets.size()];
        long c = 12;
        bool cheb = i % 2 == 1;
        Poly u = random_poly(rng, 1 + int(rng() % 2));
        Poly v = random_poly(rng, 1 + int(rng() % 2));
        std::vector<Poly> ps, ws;
        for (long a : as) {
            LinearMap l = random_linear(rng);
            Poly model_outer = cheb ? chebyshev(a) : Poly::monomial(Rational(1), a);
            Poly model_inner =
                cheb ? chebyshev(c / a) : Poly::monomial(Rational(1), c / a);
            ps.push_back(compose(u, compose(model_outer, l.inverse().to_poly())));
            ws.push_back(compose(l.apply_outer(model_inner), v));
        }
        ReducedTuple t = reduce_coprime(ps, ws);
        long gp = 0, gw = 0;
        for (const Poly& p : ps) gp = std::gcd(gp, long(p.degree()));
        for (const Poly& w : ws) gw = std::gcd(gw, long(w.degree()));
        if (t.U.degree() != gp || t.V.degree() != gw) {
            detail = "degree gcds missed at instance " + std::to_string(i);
            return false;
        }
        Poly reduced = compose(t.p_tilde[0], t.w_tilde[0]);
        long rgp = 0, rgw = 0;
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (!(compose(t.U, t.p_tilde[j]) == ps[j]) ||
                !(compose(t.w_tilde[j], t.V) == ws[j]) ||
                !(compose(t.p_tilde[j], t.w_tilde[j]) == reduced)) {
                detail = "reconstruction failed at instance " + std::to_string(i);
                return false;
            }
            rgp = std::gcd(rgp, long(t.p_tilde[j].degree()));
            rgw = std::gcd(rgw, long(t.w_tilde[j].degree()));
        }
        if (rgp != 1 || rgw != 1) {
            detail = "reduced degrees are not coprime at instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 4. Second Ritt normal forms recovered from 100 + 100 random instances.
bool crit4(std::string& detail) {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 100; ++i) {
        LinearMap nu = random_linear(rng), mu = random_linear(rng);
        LinearMap s1 = random_linear(rng), s2 = random_linear(rng);
        long n = 2 + long(rng() % 4);
        long s = 1 + long(rng() % 5);
        while (std::gcd(s, n) != 1) s = 1 + long(rng() % 5);
        Poly r = random_poly(rng, 1 + int(rng() % 2));
        while (is_zero(r.constant_term())) r += Poly(Rational(1));
        Poly zsrn = pow_poly(r, n).shifted(s);
        Poly zsrzn = compose(r, Poly::monomial(Rational(1), n)).shifted(s);
        Poly p1 = nu.apply_outer(compose(zsrn, s1.inverse().to_poly()));
        Poly w1 = s1.apply_outer(compose(Poly::monomial(Rational(1), n), mu.to_poly()));
        Poly p2 = nu.apply_outer(
            compose(Poly::monomial(Rational(1), n), s2.inverse().to_poly()));
        Poly w2 = s2.apply_outer(compose(zsrzn, mu.to_poly()));
        RittForm f = ritt2_normal_form(p1, w1, p2, w2);
        auto rec = reconstruct_ritt(f);
        if (!std::holds_alternative<RittFirstKind>(f.form) || !(rec[0] == p1) ||
            !(rec[1] == w1) || !(rec[2] == p2) || !(rec[3] == w2)) {
            detail = "first kind failed at instance " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 100; ++i) {
        LinearMap nu = random_linear(rng), mu = random_linear(rng);
        LinearMap s1 = random_linear(rng), s2 = random_linear(rng);
        long n = 3 + long(rng() % 5);
        long m = n;
        while (std::gcd(n, m) != 1) m = 3 + long(rng() % 5);
        Poly p1 = nu.apply_outer(compose(chebyshev(m), s1.inverse().to_poly()));
        Poly w1 = s1.apply_outer(compose(chebyshev(n), mu.to_poly()));
        Poly p2 = nu.apply_outer(compose(chebyshev(n), s2.inverse().to_poly()));
        Poly w2 = s2.apply_outer(compose(chebyshev(m), mu.to_poly()));
        RittForm f = ritt2_normal_form(p1, w1, p2, w2);
        auto rec = reconstruct_ritt(f);
        if (!std::holds_alternative<RittSecondKind>(f.form) || !(rec[0] == p1) ||
            !(rec[1] == w1) || !(rec[2] == p2) || !(rec[3] == w2)) {
            detail = "second kind failed at instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 5. Structural moment vanishing for 100 random reducible instances.
bool crit5(std::string& detail) {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int i = 0; i < 100; ++i) {
        Rational a(small(rng));
        Rational b = a + Rational(1 + long(rng() % 3));
        Poly w = (P({0, 1}) - Poly(a)) * (P({0, 1}) - Poly(b));
        w *= random_poly(rng, int(rng() % 2), -3, 3);
        w += Poly(Rational(small(rng)));
        Poly pt = random_poly(rng, 1 + int(rng() % 3), -4, 4);
        Poly qt = random_poly(rng, 1 + int(rng() % 3), -4, 4);
        Poly p = compose(pt, w), q = compose(qt, w);
        Endpoints e = Endpoints::rationals(a, b);
        StructuralCertificate cert = certify_reducible(p, q, w, e);
        if (!validate_certificate(cert, p, q, e).empty()) {
            detail = "certificate invalid at instance " + std::to_string(i);
            return false;
        }
        for (long k = 0; k <= 10; ++k)
            if (!scalar_is_zero(moment(p, q, e, k))) {
                detail = "nonzero moment at instance " + std::to_string(i);
                return false;
            }
    }
    return true;
}

// 6. The classic counterexample classifies as case 2 and not case 1.
bool crit6(std::string& detail) {
    Poly p = P({0, 0, 1, 0, -2, 0, 1});
    Poly q = P({0, -1, 1, 1});
    Endpoints e = Endpoints::rationals(Rational(1), Rational(-1));
    for (long k = 0; k <= 10; ++k)
        if (!scalar_is_zero(moment(p, q, e, k))) {
            detail = "a moment is nonzero";
            return false;
        }
    if (try_case1(p, q, e)) {
        detail = "case 1 unexpectedly accepted";
        return false;
    }
    Classification c = classify_solution(p, q, e);
    if (c.case_number != 2) {
        detail = "expected case 2, got " + std::to_string(c.case_number);
        return false;
    }
    return c.case2->n == 2 && c.case2->s == 1 && c.case2->R == P({-1, 1});
}

// 7. The T_6 instance classifies as case 3; moments vanish in Q[x]/(x^2-3).
bool crit7(std::string& detail) {
    Endpoints e = Endpoints::nodes(make_node(1, 6), make_node(5, 6));
    Poly p = chebyshev(6);
    Poly q = chebyshev(2) + chebyshev(3);
    if (!(e.field()->min_poly() == P({-3, 0, 1}))) {
        detail = "endpoint field is not Q[x]/(x^2-3)";
        return false;
    }
    for (long k = 0; k <= 6; ++k)
        if (!scalar_is_zero(moment(p, q, e, k))) {
            detail = "a moment is nonzero in the field";
            return false;
        }
    Classification c = classify_solution(p, q, e);
    if (c.case_number != 3) {
        detail = "expected case 3, got " + std::to_string(c.case_number);
        return false;
    }
    return c.case3->n == 2 && c.case3->m == 3;
}

// 8. The five displayed expressions for the degree-90 P agree exactly.
bool crit8(std::string& detail) {
    std::vector<Poly> chain = case4_identity_chain(3, 5, P({-1, 1}));
    if (chain[0].degree() != 90) {
        detail = "unexpected degree";
        return false;
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!(chain[i] == chain[0])) {
            detail = "expression " + std::to_string(i) + " differs";
            return false;
        }
    return true;
}

// 9. Simultaneous zeros of T_3 and T_5 over the node grid occur only at 0.
bool crit9(std::string& detail) {
    // denominator-15 grid: no simultaneous zeros exist there at all
    for (long k = 0; k <= 15; ++k) {
        NodeAngle node = make_node(k, 15);
        NodeAngle z3 = node_cheb_image(node, 3);
        NodeAngle z5 = node_cheb_image(node, 5);
        bool zero3 = 2 * z3.k == z3.N, zero5 = 2 * z5.k == z5.N;
        if (zero3 && zero5) {
            detail = "unexpected zero at cos(" + std::to_string(k) + "pi/15)";
            return false;
        }
    }
    // covering grid with denominator 30 contains cos(pi/2) = 0 and nothing else
    long hits = 0;
    for (long k = 0; k <= 30; ++k) {
        NodeAngle node = make_node(k, 30);
        NodeAngle z3 = node_cheb_image(node, 3);
        NodeAngle z5 = node_cheb_image(node, 5);
        if (2 * z3.k == z3.N && 2 * z5.k == z5.N) {
            ++hits;
            if (!(node == make_node(1, 2))) {
                detail = "simultaneous zero away from cos(pi/2)";
                return false;
            }
            Endpoints e = Endpoints::nodes(node, make_node(0, 1));
            if (!skun_check_b(3, 5, e).a_is_zero) {
                detail = "lemma conclusion a = 0 failed";
                return false;
            }
        }
    }
    if (hits != 1) {
        detail = "expected exactly one simultaneous zero, got " + std::to_string(hits);
        return false;
    }
    return true;
}

// 10. Non-representability of the degree-210 three-term family.
bool crit10(std::string& detail) {
    RemarkReport r = verify_remark_example(5, 7, P({-1, 1}));
    if (!r.primality_hypothesis_met) {
        detail = "primality hypothesis unexpectedly unmet";
        return false;
    }
    if (!r.two_term_impossible) {
        detail = "a 2-subset system was feasible";
        return false;
    }
    if (!r.triple_feasible) {
        detail = "the 3-term system was infeasible";
        return false;
    }
    return true;
}

// 11. Witness scans on the chain and 50 random Ritt instances.
bool crit11(std::string& detail) {
    auto reconstruct = [](const EquivWitness& w) {
        Poly model = w.kind == EquivWitness::Kind::Power
                         ? Poly::monomial(Rational(1), w.n)
                         : chebyshev(w.n);
        return w.mu->apply_outer(compose(model, w.nu->to_poly()));
    };
    {
        Poly r = P({-1, 1});
        Poly half_shift = Poly::from_coeffs({make_rational(1, 2), make_rational(1, 2)});
        Poly h = half_shift * pow_poly(compose(r, half_shift), 2);
        Poly w3 = compose(compose(r, P({0, 0, 1})).shifted(1), chebyshev(15));
        std::vector<Poly> ps = {compose(h, chebyshev(5)), compose(h, chebyshev(3)),
                                P({0, 0, 1})};
        std::vector<Poly> ws = {chebyshev(6), chebyshev(10), w3};
        WitnessScan w = witness_scan(ps, ws);
        if (!w.outer.materialized() || !w.inner.materialized() ||
            !(reconstruct(w.outer) == ps[w.outer_index]) ||
            !(reconstruct(w.inner) == ws[w.inner_index])) {
            detail = "chain witnesses failed to reconstruct";
            return false;
        }
    }
    std::mt19937_64 rng(113);
    for (int i = 0; i < 50; ++i) {
        LinearMap nu = random_linear(rng), mu = random_linear(rng);
        LinearMap s1 = random_linear(rng), s2 = random_linear(rng);
        std::vector<Poly> ps, ws;
        if (i % 2 == 0) {
            long n = 2 + long(rng() % 4);
            long s = 1 + long(rng() % 5);
            while (std::gcd(s, n) != 1) s = 1 + long(rng() % 5);
            Poly r = random_poly(rng, 1 + int(rng() % 2));
            while (is_zero(r.constant_term())) r += Poly(Rational(1));
            ps = {nu.apply_outer(compose(pow_poly(r, n).shifted(s), s1.inverse().to_poly())),
                  nu.apply_outer(compose(Poly::monomial(Rational(1), n),
                                         s2.inverse().to_poly()))};
            ws = {s1.apply_outer(compose(Poly::monomial(Rational(1), n), mu.to_poly())),
                  s2.apply_outer(compose(compose(r, Poly::monomial(Rational(1), n)).shifted(s),
                                         mu.to_poly()))};
        } else {
            long n = 3 + long(rng() % 5);
            long m = n;
            while (std::gcd(n, m) != 1) m = 3 + long(rng() % 5);
            ps = {nu.apply_outer(compose(chebyshev(m), s1.inverse().to_poly())),
                  nu.apply_outer(compose(chebyshev(n), s2.inverse().to_poly()))};
            ws = {s1.apply_outer(compose(chebyshev(n), mu.to_poly())),
                  s2.apply_outer(compose(chebyshev(m), mu.to_poly()))};
        }
        WitnessScan w = witness_scan(ps, ws);
        if (!w.outer.materialized() || !w.inner.materialized() ||
            !(reconstruct(w.outer) == ps[w.outer_index]) ||
            !(reconstruct(w.inner) == ws[w.inner_index])) {
            detail = "witness failed at instance " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Chebyshev composition and parity identities (n, m <= 12)", 5.0, crit1},
        {2, "decomposition roundtrip on 300 random pairs", 30.0, crit2},
        {3, "gcd-degree reduction on 100 multi-decompositions", 30.0, crit3},
        {4, "second Ritt normal forms on 100 + 100 instances", 60.0, crit4},
        {5, "structural moment vanishing on 100 reducible instances", 60.0, crit5},
        {6, "classic counterexample: case 2, case 1 rejected", 5.0, crit6},
        {7, "T_6 instance: case 3 with moments vanishing in Q[x]/(x^2-3)", 10.0, crit7},
        {8, "degree-90 triple-decomposition identity chain", 10.0, crit8},
        {9, "simultaneous Chebyshev zeros on the node grid only at 0", 5.0, crit9},
        {10, "degree-210 family needs three reducible summands", 300.0, crit10},
        {11, "power/Chebyshev witness scan on chain and 50 Ritt instances", 30.0, crit11},
    };
    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over budget");
        }
        std::printf("%s criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    c.budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
