#include "leviform/hermitian_poly.hpp"

#include "leviform/errors.hpp"

namespace leviform {

HermitianPoly::HermitianPoly(std::size_t n, Table table) : n_(n) {
  for (auto& [key, c] : table) {
    if (key.first.size() != n || key.second.size() != n)
      throw DomainError(ErrorCategory::InvalidArgument, "multi-index length does not match variable count");
    if (c.is_zero()) continue;
    if (key.first.is_zero() && key.second.is_zero())
      throw DomainError(ErrorCategory::InvalidArgument, "defining function must vanish at the origin");
    table_.emplace(key, std::move(c));
  }
  for (const auto& [key, c] : table_) {
    auto mirror = table_.find({key.second, key.first});
    if (mirror == table_.end() || !(mirror->second == c.conj()))
      throw DomainError(ErrorCategory::NotRealValued, "expression is not real-valued (conj(F_mu,nu) != F_nu,mu)");
  }
}

HermitianPoly HermitianPoly::from_split_poly(std::size_t n, const Poly& p) {
  if (p.nvars() != 2 * n) throw DomainError(ErrorCategory::InvalidArgument, "expected a polynomial in 2n variables");
  Table t;
  for (const auto& [e, c] : p.terms()) t.emplace(Key{e.slice(0, n), e.slice(n, n)}, c);
  return HermitianPoly(n, std::move(t));
}

HermitianPoly HermitianPoly::real_part(const Poly& h) {
  std::size_t n = h.nvars();
  ExponentVector zero(n);
  GaussRational half(mpq_class(1, 2));
  Table t;
  auto add = [&t](Key key, const GaussRational& c) {
    auto [it, inserted] = t.try_emplace(std::move(key), c);
    if (!inserted) it->second += c;
  };
  for (const auto& [e, c] : h.terms()) {
    add({e, zero}, c * half);
    add({zero, e}, c.conj() * half);
  }
  return HermitianPoly(n, std::move(t));
}

GaussRational HermitianPoly::coefficient(const ExponentVector& mu, const ExponentVector& nu) const {
  auto it = table_.find({mu, nu});
  return it == table_.end() ? GaussRational() : it->second;
}

Poly HermitianPoly::as_split_poly() const {
  Poly::TermMap terms;
  for (const auto& [key, c] : table_) terms.emplace(key.first.concat(key.second), c);
  return Poly(2 * n_, std::move(terms));
}

Poly HermitianPoly::holomorphic_block() const {
  Poly::TermMap terms;
  for (const auto& [key, c] : table_)
    if (key.second.is_zero()) terms.emplace(key.first, c);
  return Poly(n_, std::move(terms));
}

bool satisfies_reality(std::size_t n, const Poly& split) {
  for (const auto& [e, c] : split.terms()) {
    ExponentVector mirror = e.slice(n, n).concat(e.slice(0, n));
    if (!(split.coefficient(mirror) == c.conj())) return false;
  }
  return true;
}

}  // namespace leviform
