#ifndef PMP_RITT_FORMS_HPP
#define PMP_RITT_FORMS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "pmp/decompose.hpp"
#include "pmp/linear_map.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

// Witness for P = mu o model o nu with model = z^n or T_n. Chebyshev
// witnesses whose two critical values are conjugate over a quadratic
// extension carry the discriminant instead of rational maps.
struct EquivWitness {
    enum class Kind { Power, Chebyshev };
    Kind kind;
    long n;
    std::optional<LinearMap> mu, nu;
    std::optional<Rational> extension_disc;

    bool materialized() const { return mu.has_value() && nu.has_value(); }
};

// Succeeds iff P' = c (z - z0)^(deg-1); z0 is rational automatically.
std::optional<EquivWitness> power_equiv(const Poly& p);

// Passport test: P' squarefree and exactly two critical values with the
// Chebyshev multiplicity pattern. Requires deg P >= 3.
std::optional<EquivWitness> cheb_equiv(const Poly& p);

// Any quadratic is sigma o T_2 o mu; rational always. deg 1 maps to T_1 = z.
// Used where case analysis needs Chebyshev form below cheb_equiv's reach.
std::optional<std::tuple<LinearMap, long, LinearMap>> cheb_decompose(const Poly& p);

struct RittFirstKind {
    // P1 = nu o z^s R^n(z) o sigma1^{-1},  W1 = sigma1 o z^n o mu
    // P2 = nu o z^n o sigma2^{-1},         W2 = sigma2 o z^s R(z^n) o mu
    LinearMap nu, sigma1, sigma2, mu;
    Poly R;
    long s, n;
};

struct RittSecondKind {
    // P1 = nu o T_m o sigma1^{-1},  W1 = sigma1 o T_n o mu
    // P2 = nu o T_n o sigma2^{-1},  W2 = sigma2 o T_m o mu
    LinearMap nu, sigma1, sigma2, mu;
    long m, n;
};

struct RittForm {
    std::variant<RittFirstKind, RittSecondKind> form;
    bool swapped = false;  // roles of (P1,W1) and (P2,W2) exchanged
};

// The four polynomials reproduced by a form, in input order (respecting
// swapped). Used for the exact-reconstruction guarantee.
std::array<Poly, 4> reconstruct_ritt(const RittForm& form);

// Classify a double decomposition P1 o W1 = P2 o W2 with coprime outer and
// coprime inner degrees into one of the two normal forms, detecting on the
// inner factors first (powers before Chebyshev) and recovering the remaining
// maps by quotients; reconstruction is verified exactly before returning.
RittForm ritt2_normal_form(const Poly& p1, const Poly& w1, const Poly& p2,
                           const Poly& w2);

struct PowerSide {
    // W2 = sigma o z^s R(z^n), P = U o z^{sn/e} R^{n/e}(z^n), e = gcd(n, deg W2);
    // sigma normalized to unit slope.
    LinearMap sigma;
    Poly R;
    long s, e;
};

struct ChebSide {
    // W2 = sigma o T_m, P = U o T_t with t = lcm(n, m)
    LinearMap sigma;
    long t;
};

struct ChebHalf {
    // W2 = sigma o zS(z^2) o T_{n/2}, P = U o z^2 S^2(z^2) o T_{n/2}
    LinearMap sigma;
    Poly S;
};

using FactorForm = std::variant<PowerSide, ChebSide, ChebHalf>;

// Factor forms of the second factor when P = P1 o z^n = P2 o W2 (n >= 2).
FactorForm power_cofactor_form(const Poly& p1, long n, const Poly& p2, const Poly& w2);

// Factor forms when P = P1 o T_n = P2 o W2 and n does not divide deg W2.
FactorForm cheb_cofactor_form(const Poly& p1, long n, const Poly& p2, const Poly& w2);

struct WitnessScan {
    std::size_t outer_index;  // 0-based
    EquivWitness outer;
    std::size_t inner_index;
    EquivWitness inner;
};

// For P_1 o W_1 = ... = P_r o W_r with both degree gcds 1: the first outer
// and inner factors linearly equivalent to a power or Chebyshev polynomial.
WitnessScan witness_scan(const std::vector<Poly>& ps, const std::vector<Poly>& ws);

}  // namespace pmp

#endif
