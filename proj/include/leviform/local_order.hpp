#pragma once

#include <compare>
#include <cstddef>

#include "leviform/poly.hpp"

namespace leviform {

/// Anti-graded reverse lexicographic order on monomials in n variables.
///
/// Lower total degree is larger, so 1 is the largest monomial; equal degrees
/// are broken reverse-lexicographically (x1 > x2 > ... > xn). This is a local
/// order: it computes in the local ring at the origin.
class LocalOrder {
 public:
  explicit LocalOrder(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

 private:
  std::size_t nvars_;
};

struct LeadingTerm {
  ExponentVector exps;
  GaussRational coeff;
};

/// Largest term of a nonzero polynomial under the order.
LeadingTerm leading_term(const Poly& p, const LocalOrder& order);

/// deg(p) - deg(LM(p)): how far p reaches beyond its leading monomial.
std::uint64_t ecart(const Poly& p, const LocalOrder& order);

}  // namespace leviform
