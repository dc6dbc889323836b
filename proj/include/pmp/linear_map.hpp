#ifndef PMP_LINEAR_MAP_HPP
#define PMP_LINEAR_MAP_HPP

#include "pmp/polynomial.hpp"
#include "pmp/rational.hpp"

namespace pmp {

// Degree-one polynomial a*z + b with a != 0; always invertible.
class LinearMap {
public:
    LinearMap() : a_(1), b_(0) {}
    LinearMap(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        if (is_zero(a_)) throw DegreeError("linear map with zero slope");
    }
    static LinearMap identity() { return {}; }

    // From a degree-one polynomial.
    static LinearMap from_poly(const Poly& p) {
        if (p.degree() != 1) throw DegreeError("linear map requires degree one");
        return {p.coeff(1), p.coeff(0)};
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    Poly to_poly() const {
        return Poly::from_coeffs({b_, a_});
    }

    LinearMap inverse() const { return {Rational(1) / a_, -b_ / a_}; }

    Rational operator()(const Rational& x) const { return a_ * x + b_; }

    // this(other(z))
    LinearMap after(const LinearMap& other) const {
        return {a_ * other.a_, a_ * other.b_ + b_};
    }

    // this(P(z)) and P(this(z))
    Poly apply_outer(const Poly& p) const { return p.scaled(a_) + Poly(b_); }
    Poly apply_inner(const Poly& p) const { return compose(p, to_poly()); }

    bool is_identity() const { return a_ == 1 && is_zero(b_); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    Rational a_, b_;
};

}  // namespace pmp

#endif
