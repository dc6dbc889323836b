#ifndef PMP_TEXT_FORMAT_HPP
#define PMP_TEXT_FORMAT_HPP

#include <string>

#include "pmp/polynomial.hpp"

namespace pmp {

// Expression form, descending degree: "32*x^6 - 48*x^4 + 18*x^2 - 1".
std::string poly_to_string(const Poly& p);

// Ascending coefficient list: "[c0, c1, ...]".
std::string poly_to_coeff_list(const Poly& p);

}  // namespace pmp

#endif
