#pragma once

#include <string>
#include <vector>

#include "leviform/hermitian_poly.hpp"
#include "leviform/poly.hpp"

namespace leviform {

/// Graded reverse lexicographic comparison: true when a is displayed before b
/// (higher total degree first; ties go to the smaller trailing exponent).
bool display_before(const ExponentVector& a, const ExponentVector& b);

/// Terms of p in display order.
std::vector<std::pair<ExponentVector, GaussRational>> display_terms(const Poly& p);

/// "x", "y" when n == 2, otherwise "z1".."zn".
std::vector<std::string> holomorphic_names(std::size_t n);

/// "x^2*y"; "1" for the zero exponent.
std::string monomial_to_string(const ExponentVector& e, const std::vector<std::string>& names);

/// Compact form, e.g. "x^2*y+y^3" or "1/2*z1-i*z2". Parses back with the
/// expression parser given the same names.
std::string to_string(const Poly& p, const std::vector<std::string>& names);
std::string to_string(const Poly& p);

/// Variables printed as z1..zn, w1..wn.
std::string to_string(const BiPoly& p);

/// Real-analytic form, using conj(.) for the antiholomorphic variables.
std::string to_string(const HermitianPoly& f);

}  // namespace leviform
