#include "pmp/node_angle.hpp"

#include <numeric>

namespace pmp {

NodeAngle make_node(std::int64_t k, std::int64_t N) {
    if (N < 1) throw DegreeError("node denominator must be positive");
    std::int64_t m = ((k % (2 * N)) + 2 * N) % (2 * N);
    if (m > N) m = 2 * N - m;
    return NodeAngle{m, N};
}

NodeAngle node_cheb_image(const NodeAngle& p, std::int64_t n) {
    if (n < 1) throw DegreeError("node_cheb_image requires n >= 1");
    return make_node(p.k * n, p.N);
}

namespace {
// Both nodes rescaled to the lcm denominator.
std::pair<NodeAngle, NodeAngle> common_denominator(const NodeAngle& p,
                                                   const NodeAngle& q) {
    std::int64_t M = std::lcm(p.N, q.N);
    return {make_node(p.k * (M / p.N), M), make_node(q.k * (M / q.N), M)};
}
}  // namespace

bool operator==(const NodeAngle& p, const NodeAngle& q) {
    auto [a, b] = common_denominator(p, q);
    return a.k == b.k;
}

NodeRelation node_relations(const NodeAngle& p, const NodeAngle& q) {
    auto [a, b] = common_denominator(p, q);
    NodeRelation r;
    r.equal = a.k == b.k;
    r.negatives = (a.k + b.k) % (2 * a.N) == a.N;
    return r;
}

NodeAngle node_negate(const NodeAngle& p) { return make_node(p.N - p.k, p.N); }

FieldElement node_embed(const NodeAngle& p, const FieldPtr& field) {
    if (field->two_cos_N() != p.N)
        throw EndpointError("node denominator does not match the field");
    FieldElement half_gen =
        FieldElement(field, Poly::monomial(make_rational(1, 2), 1));
    if (p.k == 0) return FieldElement::from_rational(field, Rational(1));
    return eval_in_field(chebyshev(p.k), half_gen);
}

FieldElement eval_at_node(const Poly& p, const NodeAngle& x) {
    auto field = NumberField::two_cos_field(x.N);
    return eval_in_field(p, node_embed(x, field));
}

std::string to_string(const NodeAngle& p) {
    return "cos(" + std::to_string(p.k) + "*pi/" + std::to_string(p.N) + ")";
}

NodeAngle parse_node(const std::string& text) {
    // cos(<int>*pi/<int>), whitespace-insensitive
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&] { throw ParseError("expected cos(k*pi/N), got '" + text + "'", 0); };
    if (s.rfind("cos(", 0) != 0 || s.back() != ')') fail();
    std::string body = s.substr(4, s.size() - 5);
    auto star = body.find("*pi/");
    if (star == std::string::npos) fail();
    std::string ks = body.substr(0, star);
    std::string ns = body.substr(star + 4);
    try {
        std::size_t used = 0;
        std::int64_t k = std::stoll(ks, &used);
        if (used != ks.size()) fail();
        std::int64_t N = std::stoll(ns, &used);
        if (used != ns.size()) fail();
        return make_node(k, N);
    } catch (const std::logic_error&) {
        fail();
    }
    return {};
}

}  // namespace pmp
