#ifndef PMP_EXPR_PARSER_HPP
#define PMP_EXPR_PARSER_HPP

#include <string>
#include <vector>

#include "pmp/polynomial.hpp"

namespace pmp {

struct ParsedPoly {
    Poly value;
    std::vector<std::string> warnings;
};

// Expression grammar over rational literals, x, + - * ^ and the composition
// operator "@" (loosest, right-associative); T(n) builds the Chebyshev
// polynomial. "[c0, c1, ...]" coefficient lists are accepted too. Errors
// carry byte offsets.
ParsedPoly parse_poly_checked(const std::string& src);

Poly parse_poly(const std::string& src);  // warnings dropped

}  // namespace pmp

#endif
