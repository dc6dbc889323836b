#ifndef PMP_COMPOSITION_SPAN_HPP
#define PMP_COMPOSITION_SPAN_HPP

#include <optional>
#include <vector>

#include "pmp/polynomial.hpp"

namespace pmp {

// Solve A x = rhs exactly over Q. Elimination pivots on the leftmost column
// with a nonzero entry in the smallest unused row; free variables are set to
// zero, so the solution is deterministic. Returns nullopt when infeasible.
std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

// Polynomials V_i with sum_i V_i(W_i) = Q and deg V_i <= floor(deg Q / deg W_i),
// found by exact elimination on the coefficients of the V_i. Absent when Q is
// outside the span.
std::optional<std::vector<Poly>> express_in_composition_span(
    const Poly& q, const std::vector<Poly>& inner);

}  // namespace pmp

#endif
