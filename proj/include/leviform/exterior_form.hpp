#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "leviform/poly.hpp"

namespace leviform {

/// Homogeneous exterior differential form on C^{2n} with polynomial
/// coefficients, over the covector basis dz_1..dz_n, dw_1..dw_n (indices
/// 0..n-1 for dz, n..2n-1 for dw).
///
/// Terms are keyed by strictly increasing index tuples; a zero coefficient is
/// never stored. Degrees are capped at kMaxDegree.
class ExteriorForm {
 public:
  using Index = std::vector<std::uint8_t>;
  static constexpr std::size_t kMaxDegree = 4;

  /// The zero form of the given degree on C^{2n}.
  ExteriorForm(std::size_t n, std::size_t degree);

  /// A 0-form.
  static ExteriorForm scalar(std::size_t n, const Poly& f);
  /// The covector with basis index `index` (dz_j is j, dw_j is n + j).
  static ExteriorForm covector(std::size_t n, std::size_t index);
  static ExteriorForm dz(std::size_t n, std::size_t j) { return covector(n, j); }
  static ExteriorForm dw(std::size_t n, std::size_t j) { return covector(n, n + j); }
  /// d of a 0-form: sum_k (df/dv_k) dv_k over all 2n variables.
  static ExteriorForm differential(std::size_t n, const Poly& f);

  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Index, Poly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Poly coefficient(const Index& index) const;

  ExteriorForm operator-() const;
  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  /// Multiplication by a function (0-form).
  friend ExteriorForm operator*(const Poly& f, const ExteriorForm& a);
  friend ExteriorForm operator*(const GaussRational& c, const ExteriorForm& a);

  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

  /// Adds coef * dv_{index[0]} ^ ... with sign normalization for unsorted indices.
  void add_term(const Index& index, const Poly& coef);

 private:
  std::size_t n_;
  std::size_t degree_;
  std::map<Index, Poly> terms_;
};

/// a ^ b with Koszul signs. Throws InvalidArgument when deg a + deg b exceeds
/// 2n or kMaxDegree, or when the forms live on different spaces.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

}  // namespace leviform
