#ifndef PMP_POLYNOMIAL_HPP
#define PMP_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pmp/errors.hpp"
#include "pmp/rational.hpp"

namespace pmp {

// Dense univariate polynomial, coefficients ascending by degree, leading
// coefficient nonzero (the zero polynomial has an empty vector). K is a
// commutative ring with K(0)/K(1) constructible from int; division-based
// algorithms are only instantiated when K is a field.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const K& c) {
        if (!(c == K(0))) c_.push_back(c);
    }
    Polynomial(std::initializer_list<K> cs) : c_(cs) { trim(); }

    static Polynomial from_coeffs(std::vector<K> cs) {
        Polynomial p;
        p.c_ = std::move(cs);
        p.trim();
        return p;
    }
    static Polynomial variable() { return monomial(K(1), 1); }
    static Polynomial monomial(const K& c, std::size_t d) {
        Polynomial p;
        if (!(c == K(0))) {
            p.c_.assign(d + 1, K(0));
            p.c_[d] = c;
        }
        return p;
    }

    // degree() is -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& lc() const { return c_.back(); }  // nonzero polynomials only
    K constant_term() const { return coeff(0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial operator-() const {
        Polynomial r(*this);
        for (K& c : r.c_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const auto& x = a.c_;
        const auto& y = b.c_;
        std::vector<K> out(x.size() + y.size() - 1, K(0));
        const long n = static_cast<long>(out.size());
        for (long k = 0; k < n; ++k) {
            const long lo = k >= static_cast<long>(y.size()) ? k - static_cast<long>(y.size()) + 1 : 0;
            const long hi = std::min<long>(k, static_cast<long>(x.size()) - 1);
            K acc = x[lo] * y[k - lo];
            for (long i = lo + 1; i <= hi; ++i) acc = acc + x[i] * y[k - i];
            out[k] = std::move(acc);
        }
        return from_coeffs(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const K& s) const {
        if (s == K(0)) return {};
        Polynomial r(*this);
        for (K& c : r.c_) c = c * s;
        return r;
    }

    // z^k * this
    Polynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Polynomial r;
        r.c_.assign(c_.size() + k, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

using Poly = Polynomial<Rational>;
using PolyOverPoly = Polynomial<Polynomial<Rational>>;  // Q[t][z], for elimination

template <class K>
K eval_poly(const Polynomial<K>& p, const K& x) {
    if (p.is_zero()) return K(0);
    const auto& c = p.coeffs();
    K acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

template <class K>
Polynomial<K> pow_poly(const Polynomial<K>& p, unsigned long e) {
    Polynomial<K> r(K(1));
    Polynomial<K> base = p;
    while (e) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

// A(B(z)) by Horner on polynomials.
template <class K>
Polynomial<K> compose(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero()) return {};
    const auto& c = a.coeffs();
    Polynomial<K> acc(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * b + Polynomial<K>(c[i]);
    return acc;
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
    if (p.degree() < 1) return {};
    std::vector<K> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * K(i);
    return Polynomial<K>::from_coeffs(std::move(out));
}

// Antiderivative with zero constant term (field K).
template <class K>
Polynomial<K> antiderivative(const Polynomial<K>& p) {
    if (p.is_zero()) return {};
    std::vector<K> out(p.degree() + 2, K(0));
    for (int i = 0; i <= p.degree(); ++i) out[i + 1] = p.coeff(i) / K(i + 1);
    return Polynomial<K>::from_coeffs(std::move(out));
}

// Exact division with remainder over a field.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a,
                                               const Polynomial<K>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo(a.degree() - b.degree() + 1, K(0));
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        K t = rem[k + b.degree()] / bc.back();
        quo[k] = t;
        if (!(t == K(0)))
            for (int i = 0; i <= b.degree(); ++i) rem[k + i] = rem[k + i] - t * bc[i];
    }
    return {Polynomial<K>::from_coeffs(std::move(quo)),
            Polynomial<K>::from_coeffs(std::move(rem))};
}

// Quotient when the division is exact; throws otherwise.
template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("division expected to be exact");
    return q;
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    return p.scaled(K(1) / p.lc());
}

template <class K>
Polynomial<K> gcd_monic(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero() && b.is_zero())
        throw DegreeError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Extended gcd: returns (g, u, v) monic g with u*a + v*b = g.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(
    const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> u0(K(1)), u1, v0, v1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<K> u2 = u0 - q * u1;
        Polynomial<K> v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) throw DegreeError("gcd of two zero polynomials");
    K inv = K(1) / r0.lc();
    return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

// Squarefree factorization (Yun). Returns monic pairwise-coprime squarefree
// factors with their multiplicities, ascending; the product of factor^mult
// equals p / lc(p). Constant p yields an empty list.
template <class K>
std::vector<std::pair<Polynomial<K>, int>> squarefree_factorization(
    const Polynomial<K>& p) {
    std::vector<std::pair<Polynomial<K>, int>> out;
    if (p.degree() < 1) return out;
    Polynomial<K> f = make_monic(p);
    Polynomial<K> fp = derivative(f);
    Polynomial<K> a = gcd_monic(f, fp);
    Polynomial<K> b = exact_div(f, a);
    Polynomial<K> c = exact_div(fp, a);
    Polynomial<K> d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        Polynomial<K> g = gcd_monic(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

template <class K>
bool is_squarefree(const Polynomial<K>& p) {
    if (p.degree() < 1) return true;
    return gcd_monic(p, derivative(p)).degree() == 0;
}

// Chebyshev polynomial T_n from the three-term recurrence
// T_{n+1} = 2 z T_n - T_{n-1}, integer coefficients.
Poly chebyshev(long n);

}  // namespace pmp

#endif
