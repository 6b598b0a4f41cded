#include "leviform/exterior_form.hpp"

#include <algorithm>

#include "leviform/errors.hpp"

namespace leviform {

ExteriorForm::ExteriorForm(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (degree > kMaxDegree || degree > 2 * n)
    throw DomainError(ErrorCategory::InvalidArgument, "exterior degree overflow");
}

ExteriorForm ExteriorForm::scalar(std::size_t n, const Poly& f) {
  ExteriorForm out(n, 0);
  out.add_term({}, f);
  return out;
}

ExteriorForm ExteriorForm::covector(std::size_t n, std::size_t index) {
  if (index >= 2 * n) throw DomainError(ErrorCategory::InvalidArgument, "covector index out of range");
  ExteriorForm out(n, 1);
  out.add_term({static_cast<std::uint8_t>(index)}, Poly::constant(2 * n, GaussRational(1)));
  return out;
}

ExteriorForm ExteriorForm::differential(std::size_t n, const Poly& f) {
  ExteriorForm out(n, 1);
  for (std::size_t k = 0; k < 2 * n; ++k) out.add_term({static_cast<std::uint8_t>(k)}, partial(f, k));
  return out;
}

Poly ExteriorForm::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Poly(2 * n_) : it->second;
}

void ExteriorForm::add_term(const Index& index, const Poly& coef) {
  if (index.size() != degree_) throw DomainError(ErrorCategory::InvalidArgument, "term degree mismatch");
  if (coef.nvars() != 2 * n_) throw DomainError(ErrorCategory::InvalidArgument, "coefficient ring mismatch");
  if (coef.is_zero()) return;
  // Sort by insertion, tracking transpositions; a repeated covector kills the term.
  Index sorted = index;
  bool negative = false;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] >= sorted[j]; --j) {
      if (sorted[j - 1] == sorted[j]) return;
      std::swap(sorted[j - 1], sorted[j]);
      negative = !negative;
    }
  }
  for (auto v : sorted)
    if (v >= 2 * n_) throw DomainError(ErrorCategory::InvalidArgument, "covector index out of range");
  auto [it, inserted] = terms_.try_emplace(sorted, negative ? -coef : coef);
  if (!inserted) {
    if (negative) {
      it->second -= coef;
    } else {
      it->second += coef;
    }
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (o.n_ != n_ || o.degree_ != degree_)
    throw DomainError(ErrorCategory::InvalidArgument, "adding forms of different shape");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) { return *this += -o; }

ExteriorForm operator*(const Poly& f, const ExteriorForm& a) {
  ExteriorForm out(a.n_, a.degree_);
  if (f.is_zero()) return out;
  for (const auto& [k, c] : a.terms_) out.add_term(k, f * c);
  return out;
}

ExteriorForm operator*(const GaussRational& c, const ExteriorForm& a) {
  return Poly::constant(2 * a.n(), c) * a;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.n() != b.n()) throw DomainError(ErrorCategory::InvalidArgument, "wedge of forms on different spaces");
  ExteriorForm out(a.n(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      ExteriorForm::Index joined = ka;
      joined.insert(joined.end(), kb.begin(), kb.end());
      out.add_term(joined, ca * cb);
    }
  }
  return out;
}

}  // namespace leviform
