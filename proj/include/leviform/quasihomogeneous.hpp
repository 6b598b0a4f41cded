#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "leviform/poly.hpp"
#include "leviform/standard_basis.hpp"

namespace leviform {

/// Exponents of the nonzero terms of a polynomial.
struct NewtonSupport {
  std::size_t nvars = 0;
  std::set<ExponentVector> points;
};

NewtonSupport newton_support(const Poly& f);

/// Quasihomogeneous weights normalized to degree d = 1: every support point
/// k satisfies <alpha, k> = 1.
struct WeightSystem {
  std::vector<mpq_class> alpha;
  mpq_class d{1};
  /// The support did not pin alpha down; see find_weights.
  bool ambiguous = false;
};

/// Positive rational weights putting every support point on the diagonal
/// <alpha, k> = 1, or nullopt when none exist.
///
/// A variable absent from the support gets weight 1/2 (the weight it would
/// have in a stabilizing square). If the remaining system is still
/// underdetermined, the minimum-norm solution is returned when it is
/// positive; either case sets `ambiguous`. Isolated quasihomogeneous
/// singularities always have uniquely determined weights.
/// Throws InvalidArgument on an empty support.
std::optional<WeightSystem> find_weights(const NewtonSupport& support);

/// <alpha, m>.
mpq_class weighted_degree(const ExponentVector& m, const WeightSystem& w);

/// Every term of f has weighted degree exactly w.d.
bool is_quasihomogeneous(const Poly& f, const WeightSystem& w);

/// f = q + fprime with q quasihomogeneous of weighted degree 1 and every
/// term of fprime strictly above the diagonal.
struct SemiQhDecomposition {
  Poly q;
  Poly fprime;
  WeightSystem weights;
};

/// Weights are taken from the lowest ordinary-degree terms of f, widening
/// the candidate one degree at a time until the whole of f sits on or above
/// the diagonal and the principal part has finite Milnor number. When no
/// degree prefix works, weights spanned by n support points are tried.
/// Throws NotSemiquasihomogeneous when no candidate works, InvalidArgument
/// when f(0) != 0 and ZeroInput when f == 0.
SemiQhDecomposition semiqh_split(const Poly& f, const StandardBasisOptions& options = {});

/// {"alpha": ["p/q", ...], "d": "1"}
nlohmann::json to_json(const WeightSystem& w);
WeightSystem weights_from_json(const nlohmann::json& j);

}  // namespace leviform
