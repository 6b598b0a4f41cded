#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leviform/local_order.hpp"
#include "leviform/poly.hpp"

namespace leviform {

struct StandardBasisOptions {
  /// S-pairs whose lcm exceeds this total degree raise ResourceError.
  std::uint64_t degree_cap = 64;
};

/// Interreduced standard basis of an ideal of the local ring.
///
/// Generators are nonzero with leading coefficient 1, and no leading exponent
/// divides another. For zero-dimensional ideals the tails are fully reduced.
class StandardBasis {
 public:
  StandardBasis(LocalOrder order, std::vector<Poly> generators);

  const LocalOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const std::vector<ExponentVector>& leading_exponents() const noexcept { return leads_; }

  /// Every variable has a pure power among the leading exponents.
  bool is_zero_dimensional() const;
  /// Monomials outside the leading ideal (the staircase), largest first;
  /// nullopt when there are infinitely many.
  std::optional<std::vector<ExponentVector>> standard_monomials() const;

 private:
  LocalOrder order_;
  std::vector<Poly> generators_;
  std::vector<ExponentVector> leads_;
};

/// Mora's tangent-cone reduction: returns h with u*p - h in <G> for some
/// unit u of the local ring, and LM(h) divisible by no leading exponent of G.
/// Always terminates.
Poly weak_normal_form(const Poly& p, std::span<const Poly> G, const LocalOrder& order);

/// Fully reduced normal form: no term of the result is divisible by a
/// leading exponent of G.
///
/// When the leading exponents of G are zero-dimensional, high-degree
/// monomials lie in <G> and the result r satisfies p - r in <G> exactly.
/// Otherwise each term is produced by weak_normal_form, so r agrees with p
/// modulo <G> only up to unit factors, and a tail reaching past
/// options.degree_cap raises ResourceError.
Poly mora_normal_form(const Poly& p, std::span<const Poly> G, const LocalOrder& order,
                      const StandardBasisOptions& options = {});

/// Standard basis of <gens> for the local order. Throws ZeroInput when every
/// generator is zero and ResourceError when the degree cap is hit.
StandardBasis standard_basis(std::span<const Poly> gens, const LocalOrder& order,
                             const StandardBasisOptions& options = {});

/// Dimension of O_n / <gens> at the origin, or nullopt when infinite.
std::optional<std::size_t> local_quotient_dimension(std::span<const Poly> gens,
                                                    const StandardBasisOptions& options = {});

/// Partial derivatives of f.
std::vector<Poly> jacobian_ideal(const Poly& f);

/// Milnor number mu(f, 0); `infinite` marks a non-isolated singularity.
struct MilnorNumber {
  bool infinite = false;
  std::size_t value = 0;

  static MilnorNumber finite(std::size_t v) { return {false, v}; }
  static MilnorNumber infinity() { return {true, 0}; }
  friend bool operator==(const MilnorNumber&, const MilnorNumber&) = default;
};

/// Monomial basis of the local algebra O_n / Jacobian ideal.
struct LocalAlgebraBasis {
  std::vector<ExponentVector> monomials;
  std::size_t mu() const noexcept { return monomials.size(); }
};

/// Throws NotInMaximalIdeal when f(0) != 0.
MilnorNumber milnor_number(const Poly& f, const StandardBasisOptions& options = {});
/// Throws NonIsolated when the Milnor number is infinite.
LocalAlgebraBasis local_algebra_basis(const Poly& f, const StandardBasisOptions& options = {});
bool is_isolated_singularity(const Poly& f, const StandardBasisOptions& options = {});

}  // namespace leviform
