#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leviform/hermitian_poly.hpp"
#include "leviform/levi.hpp"
#include "leviform/poly.hpp"
#include "leviform/quasihomogeneous.hpp"
#include "leviform/standard_basis.hpp"

namespace leviform {

/// mu(f, 0) + 1: an isolated singularity is right equivalent to its jet of
/// this order. Throws NonIsolated or NotInMaximalIdeal.
std::size_t determinacy_bound(const Poly& f, const StandardBasisOptions& options = {});

/// A monomial carrying an undetermined coefficient.
struct TemplateSlot {
  ExponentVector monomial;
  std::string name;

  friend bool operator==(const TemplateSlot&, const TemplateSlot&) = default;
};

/// Shape of a normal form, base + sum c_j * e_j, with symbolic c_j.
struct NormalFormTemplate {
  Poly base;
  std::vector<TemplateSlot> extras;
  std::size_t mu = 0;
  std::size_t degree_bound = 0;
  std::optional<WeightSystem> weights;
  /// Produced outside the dimension range where the shape is proven.
  bool heuristic = false;
};

/// Both shapes for a Levi-flat hypersurface Re(P) + h.o.t. with homogeneous P.
struct Theorem1Result {
  /// base P plus every monomial of degree in (k, mu + 1].
  NormalFormTemplate coarse;
  /// arnold_template(P).
  NormalFormTemplate refined;
  LeviCertificate certificate;
};

/// Requires F = Re(P) + terms of order > k, P homogeneous of degree k >= 2
/// with an isolated singularity, and F Levi-flat. P is twice the
/// lowest-degree part of F's holomorphic block.
/// Throws PrincipalPart, NonIsolated or NotLeviFlat.
Theorem1Result theorem1_template(const HermitianPoly& F, const StandardBasisOptions& options = {});

/// Q plus one slot per local-algebra basis monomial of weighted degree > 1.
/// Throws NotQuasihomogeneous or NonIsolated.
NormalFormTemplate arnold_template(const Poly& Q, const StandardBasisOptions& options = {});

/// arnold_template of the quasihomogeneous part of F's holomorphic block.
/// Mixed terms of F must lie strictly above the diagonal. Marked heuristic
/// when n < 3. Throws PrincipalPart, NotSemiquasihomogeneous, NonIsolated or
/// NotLeviFlat.
NormalFormTemplate theorem2_template(const HermitianPoly& F, const StandardBasisOptions& options = {});

/// "x^5+y^5 + c1*x^3*y^3"; just the base when there are no slots.
std::string to_string(const NormalFormTemplate& t);

/// {"base": Poly, "extras": [{"monomial": [..], "name": "c1"}], "mu": m,
///  "bound": b, "heuristic": bool, "weights": WeightSystem (when known)}
nlohmann::json to_json(const NormalFormTemplate& t);
NormalFormTemplate template_from_json(const nlohmann::json& j);

}  // namespace leviform
