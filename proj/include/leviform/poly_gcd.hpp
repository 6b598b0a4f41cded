#pragma once

#include <optional>

#include "leviform/poly.hpp"

namespace leviform {

/// a / b when b divides a exactly in Q(i)[x], nullopt otherwise.
/// Throws InvalidArgument when b is zero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized so its lex-leading coefficient is 1.
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, dp/dx_1, ..., dp/dx_n), normalized like gcd. The square-free
/// part vanishes on exactly the zero set of p.
Poly square_free_part(const Poly& p);

}  // namespace leviform
