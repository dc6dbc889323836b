#include "pmp/text_format.hpp"

namespace pmp {

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rational ac = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += to_string(ac);
            continue;
        }
        if (!(ac == 1)) out += to_string(ac) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

std::string poly_to_coeff_list(const Poly& p) {
    std::string out = "[";
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
        if (i) out += ", ";
        out += to_string(p.coeff(i));
    }
    return out + "]";
}

}  // namespace pmp
