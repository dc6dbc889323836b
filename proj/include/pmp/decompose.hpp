#ifndef PMP_DECOMPOSE_HPP
#define PMP_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <vector>

#include "pmp/linear_map.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

struct DecompPair {
    Poly outer;  // A
    Poly inner;  // B, normalized (monic, zero constant term)
};

// B_hat = L o B monic with zero constant term; L is the unique such map.
std::pair<Poly, LinearMap> normalize_inner(const Poly& b);

// The unique normalized right factor of degree d when F = A o B for some B of
// that degree: B_hat is read off the top d coefficients of F (truncated
// series e-th root of the reversal), then checked by left_quotient. d must
// divide deg F.
std::optional<DecompPair> right_factor(const Poly& f, long d);

// A with A o B = F, via the B-adic expansion of F (A exists iff every digit
// is constant). deg B must divide deg F.
std::optional<Poly> left_quotient(const Poly& f, const Poly& b);

// B with A o B = F; leading coefficient branches tried positive first.
std::optional<Poly> inner_quotient(const Poly& f, const Poly& a);

// Normalized right factor (or absence) for every divisor of deg F.
std::map<long, std::optional<Poly>> all_right_factors(const Poly& f);

// Normalized Z of degree d that is a right factor of every W_i, plus the
// left quotients W_i = quotient_i o Z. d must divide every deg W_i.
std::optional<std::pair<Poly, std::vector<Poly>>> common_right_component(
    const std::vector<Poly>& ws, long d);

struct ReducedTuple {
    Poly U, V;
    std::vector<Poly> p_tilde, w_tilde;
};

// Theorem-style reduction of P_i o W_i = ... = P_r o W_r to coprime degrees:
// deg U = gcd(deg P_i), deg V = gcd(deg W_i), P_i = U o P~_i, W_i = W~_i o V,
// and all P~_i o W~_i equal.
ReducedTuple reduce_coprime(const std::vector<Poly>& ps, const std::vector<Poly>& ws);

}  // namespace pmp

#endif
