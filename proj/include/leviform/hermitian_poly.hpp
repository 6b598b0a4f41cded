#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "leviform/poly.hpp"

namespace leviform {

/// Real-valued polynomial F(z, zbar) = sum F_{mu,nu} z^mu zbar^nu.
///
/// Invariants enforced on construction: conj(F_{mu,nu}) == F_{nu,mu} and
/// no constant term (F(0) = 0).
class HermitianPoly {
 public:
  using Key = std::pair<ExponentVector, ExponentVector>;  // (mu, nu)
  using Table = std::map<Key, GaussRational>;

  HermitianPoly() = default;
  /// Throws NotRealValued when the reality condition fails and
  /// InvalidArgument on a constant term or malformed keys.
  HermitianPoly(std::size_t n, Table table);

  /// Reads the table from a polynomial in 2n variables (z_1..z_n, zbar_1..zbar_n).
  static HermitianPoly from_split_poly(std::size_t n, const Poly& p);
  /// Re(h) = (h(z) + conj(h)(zbar)) / 2 for holomorphic h in n variables.
  static HermitianPoly real_part(const Poly& h);

  std::size_t nvars() const noexcept { return n_; }
  const Table& table() const noexcept { return table_; }
  bool is_zero() const noexcept { return table_.empty(); }
  GaussRational coefficient(const ExponentVector& mu, const ExponentVector& nu) const;

  /// The same data as a polynomial in 2n variables (z block then zbar block).
  Poly as_split_poly() const;

  /// Holomorphic block: sum_mu F_{mu,0} z^mu, as a polynomial in n variables.
  Poly holomorphic_block() const;

  friend bool operator==(const HermitianPoly&, const HermitianPoly&) = default;

 private:
  std::size_t n_ = 0;
  Table table_;
};

/// True iff conj(F_{mu,nu}) == F_{nu,mu} for every entry of a split polynomial.
bool satisfies_reality(std::size_t n, const Poly& split);

}  // namespace leviform
