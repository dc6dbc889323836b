#ifndef PMP_MOMENT_PROBLEM_HPP
#define PMP_MOMENT_PROBLEM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmp/decompose.hpp"
#include "pmp/node_angle.hpp"
#include "pmp/numberfield.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

// Value of a polynomial at an endpoint: rational, or an element of the
// endpoint's number field.
using EndScalar = std::variant<Rational, FieldElement>;

bool scalar_is_zero(const EndScalar& v);
bool scalar_equal(const EndScalar& a, const EndScalar& b);
EndScalar scalar_neg(const EndScalar& v);
EndScalar scalar_pow(const EndScalar& v, unsigned long e);
EndScalar eval_at_scalar(const Poly& p, const EndScalar& x);
std::string to_string(const EndScalar& v);

// Integration endpoints: a rational pair or a pair of Chebyshev nodes on a
// common denominator (embedded into Q[x]/(minpoly_two_cos(N))). a != b.
class Endpoints {
public:
    static Endpoints rationals(Rational a, Rational b);
    static Endpoints nodes(NodeAngle a, NodeAngle b);

    bool is_node() const { return field_ != nullptr; }
    const Rational& rat_a() const { return ra_; }
    const Rational& rat_b() const { return rb_; }
    const NodeAngle& node_a() const { return na_; }
    const NodeAngle& node_b() const { return nb_; }
    const FieldPtr& field() const { return field_; }

    EndScalar value_a() const;
    EndScalar value_b() const;
    EndScalar eval_a(const Poly& w) const;
    EndScalar eval_b(const Poly& w) const;

private:
    Endpoints() = default;
    Rational ra_, rb_;
    NodeAngle na_, nb_;
    FieldPtr field_;
    std::optional<FieldElement> ea_, eb_;
};

// One reducible summand Q_i = V o W with W(a) = W(b).
struct ReducibleTerm {
    Poly V, W;
};

// Structural certificates prove every moment vanishes (change of variables);
// p_quotients[i] is the outer quotient with P = p_quotients[i] o terms[i].W.
struct StructuralCertificate {
    std::vector<ReducibleTerm> terms;
    std::vector<Poly> p_quotients;
};

// Checked certificates only cover moments k = 0..K.
struct CheckedCertificate {
    long K = 0;
    std::vector<EndScalar> values;
    bool all_zero = false;
};

using MomentCertificate = std::variant<StructuralCertificate, CheckedCertificate>;

// Exact moment integral of P^k dQ over the endpoints.
EndScalar moment(const Poly& p, const Poly& q, const Endpoints& e, long k);

CheckedCertificate moments_vanish(const Poly& p, const Poly& q, const Endpoints& e,
                                  long K);

// Certificate that P = P~ o W, Q = Q~ o W and W(a) = W(b); throws
// NotReducible naming the failed condition otherwise.
StructuralCertificate certify_reducible(const Poly& p, const Poly& q, const Poly& w,
                                        const Endpoints& e);

struct MergeResult {
    std::vector<ReducibleTerm> terms;
    bool length_warning = false;  // more than three terms survived
};

// Repeatedly replace pairs of terms whose factors share a common component Z
// with Z(a) = Z(b) by a single term; the represented sum of V_i o W_i is
// preserved exactly. The terms' W_i must be right factors of p.
MergeResult merge_reducible(const Poly& p, std::vector<ReducibleTerm> terms,
                            const Endpoints& e);

struct Case1 {
    Poly p_tilde, q_tilde, W;
};
struct Case2 {
    Poly V1, V2, R, W, U;
    long s, n;
};
struct Case3 {
    Poly V1, V2, U, W;
    long n, m;
};
struct Case4 {
    Poly V1, V2, V3, U, W, R;
    long n, m;
};

enum class UnclassifiedStatus {
    kNotASolution,     // a nonzero moment was found among k = 0..K
    kBeyondClassifier  // all checked moments vanish but no case matched
};

struct Classification {
    int case_number = 0;  // 1..4, or 0 when unclassified
    std::optional<Case1> case1;
    std::optional<Case2> case2;
    std::optional<Case3> case3;
    std::optional<Case4> case4;
    std::optional<UnclassifiedStatus> status;  // set when case_number == 0
    MomentCertificate certificate;
};

// Single-factor scan used by the classifier's first stage; exposed so callers
// can assert that case 1 is rejected.
std::optional<Case1> try_case1(const Poly& p, const Poly& q, const Endpoints& e);

// Re-substitute witnesses into the case equations and endpoint conditions.
// classify_solution re-checks every output through these before returning.
bool verify_case1(const Poly& p, const Poly& q, const Endpoints& e, const Case1& c);
bool verify_case2(const Poly& p, const Poly& q, const Endpoints& e, const Case2& c);
bool verify_case3(const Poly& p, const Poly& q, const Endpoints& e, const Case3& c);
bool verify_case4(const Poly& p, const Poly& q, const Endpoints& e, const Case4& c);

// Theorem-shaped classifier. K bounds the fallback moment check and defaults
// to deg Q + 2.
Classification classify_solution(const Poly& p, const Poly& q, const Endpoints& e,
                                 long K = -1);

// --- Lemma utilities on Chebyshev values at the endpoints ---

struct SkunPartA {
    std::size_t i1, i2;  // 0-based indices into the moduli
    long l;              // gcd(m_{i1}, m_{i2}) with T_l(a) = T_l(b)
};
struct SkunPartB {
    bool a_is_zero;
};
struct SkunPartC {
    bool a_equals_minus_b;
    std::optional<Rational> t_value;  // T_{m1 m2}(a) = +-1 for the second disjunct
};

SkunPartA skun_check_a(const std::vector<long>& moduli, const Endpoints& e);
SkunPartB skun_check_b(long m1, long m2, const Endpoints& e);
SkunPartC skun_check_c(long m1, long m2, const Endpoints& e);

// --- Solution-family generators ---

struct GeneratedSolution {
    Poly P, Q;
    Endpoints endpoints;
    StructuralCertificate certificate;
};

// P = z^{sn} R^n(z^n), Q = V1 o z^n + V2 o z^s R(z^n), endpoints (a, -a).
// Requires n even: a^n = b^n with distinct real endpoints forces b = -a.
GeneratedSolution gen_case2(long n, long s, const Poly& R, const Poly& V1,
                            const Poly& V2, const Rational& a);

// P = T_{nm}, Q = V1 o T_n + V2 o T_m at node endpoints with
// T_n(a) = T_n(b) and T_m(a) = T_m(b).
GeneratedSolution gen_case3(long n, long m, const Poly& V1, const Poly& V2,
                            const Endpoints& e);

// P = z^2 R^2(z^2) o T_{mn}, Q = V1 o T_{2n} + V2 o T_{2m} + V3 o (zR(z^2) o T_{mn});
// validates the full composition identity chain for P before returning.
GeneratedSolution gen_case4(long n, long m, const Poly& R, const Poly& V1,
                            const Poly& V2, const Poly& V3, const Endpoints& e);

// The six equal expressions for P = z^2 R^2(z^2) o T_{mn} from the triple
// decomposition (definition plus the five-step identity chain).
std::vector<Poly> case4_identity_chain(long n, long m, const Poly& R);

struct RemarkReport {
    bool primality_hypothesis_met = false;
    Endpoints endpoints;
    std::vector<long> factor_degrees;           // divisors with a right factor
    std::vector<long> endpoint_kept_degrees;    // surviving W(a) = W(b) filter
    std::vector<std::tuple<long, long, bool>> pair_feasible;  // 2-subset systems
    bool triple_feasible = false;
    bool two_term_impossible = false;

    RemarkReport() : endpoints(Endpoints::rationals(Rational(0), Rational(1))) {}
};

// Computational check of the non-representability remark: every 2-subset
// composition-span system for Q is infeasible while the 3-term system is
// feasible. R must satisfy R(1) = 0; m, n odd coprime distinct.
RemarkReport verify_remark_example(long m, long n, const Poly& R);

// Soundness helper shared by tests: checks a structural certificate against
// its (P, Q, endpoints) instance; returns an error message or empty string.
std::string validate_certificate(const StructuralCertificate& cert, const Poly& p,
                                 const Poly& q, const Endpoints& e);

}  // namespace pmp

#endif
