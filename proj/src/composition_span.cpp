#include "pmp/composition_span.hpp"

namespace pmp {

std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    std::vector<std::size_t> pivot_row_of_col(n, SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < n && next_row < m; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = next_row; r < m; ++r)
            if (!is_zero(rows[r][col])) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(rows[pr], rows[next_row]);
        std::swap(rhs[pr], rhs[next_row]);
        pr = next_row++;
        pivot_row_of_col[col] = pr;
        Rational inv = 1 / rows[pr][col];
        for (std::size_t j = col; j < n; ++j) rows[pr][j] *= inv;
        rhs[pr] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr || is_zero(rows[r][col])) continue;
            Rational factor = rows[r][col];
            for (std::size_t j = col; j < n; ++j)
                rows[r][j] -= factor * rows[pr][j];
            rhs[r] -= factor * rhs[pr];
        }
    }
    // Rows without pivots must have zero rhs.
    for (std::size_t r = next_row; r < m; ++r)
        if (!is_zero(rhs[r])) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] != SIZE_MAX) x[col] = rhs[pivot_row_of_col[col]];
    return x;
}

std::optional<std::vector<Poly>> express_in_composition_span(
    const Poly& q, const std::vector<Poly>& inner) {
    if (inner.empty()) throw DegreeError("composition span needs at least one W");
    for (const Poly& w : inner)
        if (w.degree() < 1) throw DegreeError("span inner factors must be nonconstant");
    const int dq = q.degree();
    if (q.is_zero()) return std::vector<Poly>(inner.size(), Poly{});

    std::vector<int> bound(inner.size());
    std::vector<std::vector<Poly>> powers(inner.size());
    std::size_t cols = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        bound[i] = dq / inner[i].degree();
        powers[i].reserve(bound[i] + 1);
        Poly p{Rational(1)};
        for (int j = 0; j <= bound[i]; ++j) {
            powers[i].push_back(p);
            if (j < bound[i]) p = p * inner[i];
        }
        cols += bound[i] + 1;
    }

    const std::size_t rows_n = dq + 1;
    std::vector<std::vector<Rational>> mat(rows_n, std::vector<Rational>(cols, Rational(0)));
    std::size_t col = 0;
    for (std::size_t i = 0; i < inner.size(); ++i)
        for (int j = 0; j <= bound[i]; ++j, ++col)
            for (int d = 0; d <= powers[i][j].degree(); ++d)
                mat[d][col] = powers[i][j].coeff(d);
    std::vector<Rational> rhs(rows_n);
    for (std::size_t d = 0; d < rows_n; ++d) rhs[d] = q.coeff(d);

    auto sol = solve_linear_system(std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Poly> vs;
    vs.reserve(inner.size());
    col = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        std::vector<Rational> cs(sol->begin() + col, sol->begin() + col + bound[i] + 1);
        col += bound[i] + 1;
        vs.push_back(Poly::from_coeffs(std::move(cs)));
    }
    return vs;
}

}  // namespace pmp
