// Timing comparison of the serial reference path against the OpenMP
// candidate loops; outputs are checked for exact equality while timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>

#include "pmp/decompose.hpp"
#include "pmp/moment_problem.hpp"
#include "pmp/parallel.hpp"
#include "pmp/polynomial.hpp"

using namespace pmp;

namespace {
double run_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}
}  // namespace

int main() {
    Poly r = Poly::from_coeffs({Rational(-1), Rational(1)});
    Poly core = compose(pow_poly(r, 2), Poly::monomial(Rational(1), 2)).shifted(2);
    Poly big_p = compose(core, chebyshev(35));  // degree 210

    Poly p5 = core;  // z^2 (z^2-1)^2
    Poly q5 = Poly::from_coeffs({Rational(0), Rational(-1), Rational(1), Rational(1)});
    Endpoints e5 = Endpoints::rationals(Rational(1), Rational(-1));

    CheckedCertificate mv_s, mv_p;
    std::map<long, std::optional<Poly>> fac_s, fac_p;
    RemarkReport rem_s, rem_p;

    struct Row {
        const char* name;
        std::function<void()> serial, parallel;
        std::function<bool()> equal;
    };
    Row rows[] = {
        {"moment batch (K = 120)",
         [&] { mv_s = moments_vanish(p5, q5, e5, 120); },
         [&] { mv_p = moments_vanish(p5, q5, e5, 120); },
         [&] {
             if (mv_s.values.size() != mv_p.values.size()) return false;
             for (std::size_t k = 0; k < mv_s.values.size(); ++k)
                 if (!scalar_equal(mv_s.values[k], mv_p.values[k])) return false;
             return mv_s.all_zero == mv_p.all_zero;
         }},
        {"all right factors (deg 210)",
         [&] { fac_s = all_right_factors(big_p); },
         [&] { fac_p = all_right_factors(big_p); },
         [&] { return fac_s == fac_p; }},
        {"3-term non-representability report",
         [&] { rem_s = verify_remark_example(5, 7, r); },
         [&] { rem_p = verify_remark_example(5, 7, r); },
         [&] {
             return rem_s.two_term_impossible == rem_p.two_term_impossible &&
                    rem_s.triple_feasible == rem_p.triple_feasible &&
                    rem_s.endpoint_kept_degrees == rem_p.endpoint_kept_degrees &&
                    rem_s.pair_feasible == rem_p.pair_feasible;
         }},
    };

    std::printf("threads available: %d\n", exec::max_threads());
    std::printf("%-38s %12s %12s %9s %7s\n", "workload", "serial ms", "openmp ms",
                "speedup", "equal");
    for (const Row& row : rows) {
        exec::set_parallel_enabled(false);
        double ts = run_ms(row.serial);
        exec::set_parallel_enabled(true);
        double tp = run_ms(row.parallel);
        std::printf("%-38s %12.1f %12.1f %8.2fx %7s\n", row.name, ts, tp,
                    tp > 0 ? ts / tp : 0.0, row.equal() ? "yes" : "NO");
    }
    return 0;
}
