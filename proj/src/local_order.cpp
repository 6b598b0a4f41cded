#include "leviform/local_order.hpp"

#include "leviform/errors.hpp"

namespace leviform {

std::strong_ordering LocalOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return db <=> da;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

LeadingTerm leading_term(const Poly& p, const LocalOrder& order) {
  if (p.is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

std::uint64_t ecart(const Poly& p, const LocalOrder& order) {
  return static_cast<std::uint64_t>(p.total_degree()) - leading_term(p, order).exps.total_degree();
}

}  // namespace leviform
