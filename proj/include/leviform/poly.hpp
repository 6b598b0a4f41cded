#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "leviform/gauss_rational.hpp"

namespace leviform {

/// Exponent multi-index of a monomial; its length is the ring's variable count.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : exps_(nvars, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  /// x_index^power in a ring of nvars variables.
  static ExponentVector unit(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> values() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  bool is_zero() const;
  /// Componentwise divisibility: this | other.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& o) const;
  /// Componentwise difference; requires o | *this.
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector lcm(const ExponentVector& o) const;
  /// Concatenation (z-part followed by w-part).
  ExponentVector concat(const ExponentVector& o) const;
  ExponentVector slice(std::size_t begin, std::size_t count) const;
  ExponentVector with(std::size_t index, std::uint32_t value) const;

  /// Lexicographic; used only for canonical storage, not as a monomial order.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Sparse multivariate polynomial over Q(i) in canonical form: no stored
/// coefficient is zero, so two polynomials are equal iff their term maps are.
class Poly {
 public:
  using TermMap = std::map<ExponentVector, GaussRational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  /// Drops zero coefficients; throws InvalidArgument on exponent-length mismatch.
  Poly(std::size_t nvars, TermMap terms);

  static Poly constant(std::size_t nvars, const GaussRational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(const ExponentVector& exps, const GaussRational& c = GaussRational(1));

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  GaussRational coefficient(const ExponentVector& exps) const;
  GaussRational constant_term() const;
  /// Highest total degree of a term; -1 for the zero polynomial.
  long total_degree() const;
  /// Lowest total degree of a term (the order at 0); -1 for zero.
  long order() const;
  /// Degree in a single variable.
  std::uint32_t degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  /// Sum of the terms of total degree exactly d.
  Poly homogeneous_part(std::uint64_t d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const GaussRational& c) { return c * p; }

  /// Multiplies every term by c * x^shift.
  Poly mul_term(const ExponentVector& shift, const GaussRational& c) const;
  /// Keeps only the terms for which pred(exps) holds.
  template <class Pred>
  Poly filter(Pred pred) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (pred(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void add_scaled(const Poly& o, const GaussRational& c, const ExponentVector* shift);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Poly pow(const Poly& p, std::uint32_t exponent);

/// Formal partial derivative with respect to variable `var` (0-based).
Poly partial(const Poly& p, std::size_t var);

/// Coefficientwise complex conjugation; exponents unchanged.
Poly conj_poly(const Poly& p);

/// Evaluates p at a point of (Q(i))^nvars.
GaussRational evaluate(const Poly& p, std::span<const GaussRational> point);

/// Terms of total degree <= k.
Poly jet(const Poly& p, std::uint64_t k);

/// Polynomial in 2n variables (z_1..z_n | w_1..w_n); the split is immutable.
class BiPoly {
 public:
  BiPoly() = default;
  /// Throws InvalidArgument unless poly.nvars() == 2 * n.
  BiPoly(std::size_t n, Poly poly);

  std::size_t n() const noexcept { return n_; }
  const Poly& poly() const noexcept { return poly_; }
  std::size_t z_index(std::size_t j) const noexcept { return j; }
  std::size_t w_index(std::size_t j) const noexcept { return n_ + j; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::size_t n_ = 0;
  Poly poly_;
};

}  // namespace leviform
