#ifndef PMP_NODE_ANGLE_HPP
#define PMP_NODE_ANGLE_HPP

#include <cstdint>
#include <string>

#include "pmp/numberfield.hpp"

namespace pmp {

// The exact point cos(k*pi/N) as an integer pair. Canonical form reduces
// k mod 2N and reflects into [0, N]; equality compares canonical forms on a
// common denominator (the fraction k/N itself is not reduced, so the value
// keeps its home field Q[x]/(minpoly_two_cos(N))).
struct NodeAngle {
    std::int64_t k = 0;
    std::int64_t N = 1;

    friend bool operator==(const NodeAngle& p, const NodeAngle& q);
};

NodeAngle make_node(std::int64_t k, std::int64_t N);

// T_n(cos(k pi/N)) = cos(nk pi/N) as a canonical node.
NodeAngle node_cheb_image(const NodeAngle& p, std::int64_t n);

struct NodeRelation {
    bool equal = false;
    bool negatives = false;  // cos p = -cos q
    bool neither() const { return !equal && !negatives; }
};

NodeRelation node_relations(const NodeAngle& p, const NodeAngle& q);

NodeAngle node_negate(const NodeAngle& p);  // -cos(k pi/N) = cos((N-k) pi/N)

// cos(k pi/N) in Q[x]/(minpoly_two_cos(N)) as T_k(x/2); requires the field's
// N to match the node's denominator.
FieldElement node_embed(const NodeAngle& p, const FieldPtr& field);

// Exact evaluation of a rational polynomial at a node, in the node's field.
FieldElement eval_at_node(const Poly& p, const NodeAngle& x);

// "cos(k*pi/N)"
std::string to_string(const NodeAngle& p);
NodeAngle parse_node(const std::string& text);

}  // namespace pmp

#endif
