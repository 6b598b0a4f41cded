#include "leviform/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "leviform/errors.hpp"

namespace leviform {

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t index, std::uint32_t power) {
  ExponentVector e(nvars);
  e.exps_.at(index) = power;
  return e;
}

std::uint64_t ExponentVector::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
  return r;
}

ExponentVector ExponentVector::concat(const ExponentVector& o) const {
  ExponentVector r = *this;
  r.exps_.insert(r.exps_.end(), o.exps_.begin(), o.exps_.end());
  return r;
}

ExponentVector ExponentVector::slice(std::size_t begin, std::size_t count) const {
  return ExponentVector(std::vector<std::uint32_t>(exps_.begin() + static_cast<long>(begin),
                                                   exps_.begin() + static_cast<long>(begin + count)));
}

ExponentVector ExponentVector::with(std::size_t index, std::uint32_t value) const {
  ExponentVector r = *this;
  r.exps_.at(index) = value;
  return r;
}

Poly::Poly(std::size_t nvars, TermMap terms) : nvars_(nvars) {
  for (auto& [e, c] : terms) {
    if (e.size() != nvars)
      throw DomainError(ErrorCategory::InvalidArgument, "exponent length does not match variable count");
    if (!c.is_zero()) terms_.emplace_hint(terms_.end(), e, std::move(c));
  }
}

Poly Poly::constant(std::size_t nvars, const GaussRational& c) {
  return Poly(nvars, {{ExponentVector(nvars), c}});
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError(ErrorCategory::InvalidArgument, "variable index out of range");
  return Poly(nvars, {{ExponentVector::unit(nvars, index), GaussRational(1)}});
}

Poly Poly::monomial(const ExponentVector& exps, const GaussRational& c) {
  return Poly(exps.size(), {{exps, c}});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

GaussRational Poly::coefficient(const ExponentVector& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? GaussRational() : it->second;
}

GaussRational Poly::constant_term() const { return coefficient(ExponentVector(nvars_)); }

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.total_degree()));
  return d;
}

long Poly::order() const {
  if (terms_.empty()) return -1;
  auto d = static_cast<long>(terms_.begin()->first.total_degree());
  for (const auto& [e, c] : terms_) d = std::min(d, static_cast<long>(e.total_degree()));
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] > 0; });
}

Poly Poly::homogeneous_part(std::uint64_t d) const {
  return filter([d](const ExponentVector& e) { return e.total_degree() == d; });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void Poly::add_scaled(const Poly& o, const GaussRational& c, const ExponentVector* shift) {
  if (o.nvars_ != nvars_)
    throw DomainError(ErrorCategory::InvalidArgument,
                      "variable-count mismatch (" + std::to_string(nvars_) + " vs " +
                          std::to_string(o.nvars_) + ")");
  for (const auto& [e, oc] : o.terms_) {
    ExponentVector key = shift ? e + *shift : e;
    GaussRational delta = c.is_one() ? oc : oc * c;
    auto [it, inserted] = terms_.try_emplace(std::move(key), delta);
    if (!inserted) {
      it->second += delta;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, GaussRational(1), nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, GaussRational(-1), nullptr);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_)
    throw DomainError(ErrorCategory::InvalidArgument,
                      "variable-count mismatch (" + std::to_string(a.nvars_) + " vs " +
                          std::to_string(b.nvars_) + ")");
  Poly r(a.nvars_);
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = &small == &a ? b : a;
  for (const auto& [e, c] : small.terms_) r.add_scaled(large, c, &e);
  return r;
}

Poly operator*(const GaussRational& c, const Poly& p) {
  if (c.is_zero()) return Poly(p.nvars_);
  Poly r = p;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::mul_term(const ExponentVector& shift, const GaussRational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, v * c);
  return r;
}

Poly pow(const Poly& p, std::uint32_t exponent) {
  Poly result = Poly::constant(p.nvars(), GaussRational(1));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError(ErrorCategory::InvalidArgument, "variable index out of range");
  Poly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    out.emplace(e.with(var, e[var] - 1), c * GaussRational(static_cast<long>(e[var])));
  }
  return Poly(p.nvars(), std::move(out));
}

Poly conj_poly(const Poly& p) {
  Poly::TermMap out;
  for (const auto& [e, c] : p.terms()) out.emplace_hint(out.end(), e, c.conj());
  return Poly(p.nvars(), std::move(out));
}

GaussRational evaluate(const Poly& p, std::span<const GaussRational> point) {
  if (point.size() != p.nvars())
    throw DomainError(ErrorCategory::InvalidArgument, "evaluation point has wrong dimension");
  GaussRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

Poly jet(const Poly& p, std::uint64_t k) {
  return p.filter([k](const ExponentVector& e) { return e.total_degree() <= k; });
}

BiPoly::BiPoly(std::size_t n, Poly poly) : n_(n), poly_(std::move(poly)) {
  if (poly_.nvars() != 2 * n)
    throw DomainError(ErrorCategory::InvalidArgument, "BiPoly requires exactly 2n variables");
}

}  // namespace leviform
