#include "leviform/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <tuple>

#include "leviform/errors.hpp"

namespace leviform {
namespace {

struct Reducer {
  Poly poly;
  ExponentVector lead;
  GaussRational lead_coeff;
  std::uint64_t ecart;
};

Reducer make_reducer(Poly p, const LocalOrder& order) {
  LeadingTerm lt = leading_term(p, order);
  std::uint64_t e = static_cast<std::uint64_t>(p.total_degree()) - lt.exps.total_degree();
  return {std::move(p), std::move(lt.exps), std::move(lt.coeff), e};
}

std::vector<Reducer> make_reducers(std::span<const Poly> G, std::size_t nvars, const LocalOrder& order) {
  std::vector<Reducer> out;
  for (const Poly& g : G) {
    if (g.nvars() != nvars) throw DomainError(ErrorCategory::InvalidArgument, "variable-count mismatch in ideal generators");
    if (!g.is_zero()) out.push_back(make_reducer(g, order));
  }
  return out;
}

// h -= (lt / lead(r)) * r, cancelling the term lt of h.
void cancel_term(Poly& h, const LeadingTerm& lt, const Reducer& r) {
  h -= r.poly.mul_term(lt.exps - r.lead, lt.coeff / r.lead_coeff);
}

// Mora's reduction with ecart-minimal reducer choice. Every h whose ecart is
// smaller than the chosen reducer's joins T, which bounds the ecart and
// guarantees termination.
Poly weak_nf(Poly h, std::vector<Reducer> T, const LocalOrder& order) {
  while (!h.is_zero()) {
    LeadingTerm lt = leading_term(h, order);
    std::size_t best = T.size();
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (T[k].lead.divides(lt.exps) && (best == T.size() || T[k].ecart < T[best].ecart)) best = k;
    }
    if (best == T.size()) return h;
    std::uint64_t h_ecart = static_cast<std::uint64_t>(h.total_degree()) - lt.exps.total_degree();
    if (T[best].ecart > h_ecart) {
      Reducer chosen = T[best];
      T.push_back(make_reducer(h, order));
      cancel_term(h, lt, chosen);
    } else {
      cancel_term(h, lt, T[best]);
    }
  }
  return h;
}

bool divisible_by_any(const ExponentVector& m, std::span<const ExponentVector> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const ExponentVector& l) { return l.divides(m); });
}

bool zero_dimensional(std::span<const ExponentVector> leads, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = std::any_of(leads.begin(), leads.end(), [&](const ExponentVector& l) {
      for (std::size_t k = 0; k < nvars; ++k)
        if (k != v && l[k] != 0) return false;
      return true;
    });
    if (!found) return false;
  }
  return true;
}

// Staircase of a zero-dimensional monomial ideal, largest monomial first.
std::vector<ExponentVector> staircase(std::span<const ExponentVector> leads, std::size_t nvars,
                                      const LocalOrder& order) {
  std::vector<ExponentVector> out;
  ExponentVector one(nvars);
  if (divisible_by_any(one, leads)) return out;
  std::set<ExponentVector> seen{one};
  std::deque<ExponentVector> queue{one};
  while (!queue.empty()) {
    ExponentVector m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < nvars; ++v) {
      ExponentVector next = m.with(v, m[v] + 1);
      if (divisible_by_any(next, leads) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.greater(a, b); });
  return out;
}

// Monomials of degree >= bound lie in the ideal, so they may be discarded.
std::uint64_t truncation_bound(std::span<const ExponentVector> leads, std::size_t nvars, const LocalOrder& order) {
  std::uint64_t bound = 0;
  for (const auto& m : staircase(leads, nvars, order)) bound = std::max(bound, m.total_degree() + 1);
  return bound;
}

Poly truncate(const Poly& p, std::uint64_t bound) {
  return p.filter([bound](const ExponentVector& e) { return e.total_degree() < bound; });
}

// Exact division with truncation above `bound`; valid when every monomial of
// degree >= bound lies in the ideal. Terminates because only finitely many
// monomials survive truncation and each step replaces a term by smaller ones.
Poly reduce_truncated(const Poly& p, const std::vector<Reducer>& reducers, std::uint64_t bound,
                      const LocalOrder& order) {
  Poly h = truncate(p, bound);
  Poly r(p.nvars());
  while (!h.is_zero()) {
    LeadingTerm lt = leading_term(h, order);
    auto it = std::find_if(reducers.begin(), reducers.end(), [&](const Reducer& g) { return g.lead.divides(lt.exps); });
    if (it == reducers.end()) {
      Poly term = Poly::monomial(lt.exps, lt.coeff);
      r += term;
      h -= term;
    } else {
      cancel_term(h, lt, *it);
      h = truncate(h, bound);
    }
  }
  return r;
}

Poly monic(const Poly& p, const LocalOrder& order) { return leading_term(p, order).coeff.inverse() * p; }

StandardBasis finalize(std::vector<Reducer> G, std::size_t nvars, const LocalOrder& order) {
  // Drop elements whose leading exponent is divisible by another's (ties keep the first).
  std::vector<Reducer> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (j == k || !G[j].lead.divides(G[k].lead)) continue;
      redundant = G[j].lead != G[k].lead || j < k;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Reducer& a, const Reducer& b) { return order.greater(a.lead, b.lead); });

  std::vector<ExponentVector> leads;
  for (const auto& r : minimal) leads.push_back(r.lead);
  std::vector<Poly> gens;
  if (zero_dimensional(leads, nvars)) {
    std::uint64_t bound = truncation_bound(leads, nvars, order);
    for (const auto& r : minimal) {
      Poly lead = Poly::monomial(r.lead, r.lead_coeff);
      Poly tail = reduce_truncated(r.poly - lead, minimal, bound, order);
      gens.push_back(monic(lead + tail, order));
    }
  } else {
    for (const auto& r : minimal) gens.push_back(monic(r.poly, order));
  }
  return StandardBasis(order, std::move(gens));
}

}  // namespace

StandardBasis::StandardBasis(LocalOrder order, std::vector<Poly> generators)
    : order_(order), generators_(std::move(generators)) {
  for (const Poly& g : generators_) {
    if (g.is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "standard basis generators must be nonzero");
    leads_.push_back(leading_term(g, order_).exps);
  }
}

bool StandardBasis::is_zero_dimensional() const { return zero_dimensional(leads_, order_.nvars()); }

std::optional<std::vector<ExponentVector>> StandardBasis::standard_monomials() const {
  if (!is_zero_dimensional()) return std::nullopt;
  return staircase(leads_, order_.nvars(), order_);
}

Poly weak_normal_form(const Poly& p, std::span<const Poly> G, const LocalOrder& order) {
  return weak_nf(p, make_reducers(G, p.nvars(), order), order);
}

Poly mora_normal_form(const Poly& p, std::span<const Poly> G, const LocalOrder& order,
                      const StandardBasisOptions& options) {
  std::vector<Reducer> reducers = make_reducers(G, p.nvars(), order);
  if (reducers.empty() || p.is_zero()) return p;

  std::vector<ExponentVector> leads;
  for (const auto& r : reducers) leads.push_back(r.lead);
  if (zero_dimensional(leads, p.nvars()))
    return reduce_truncated(p, reducers, truncation_bound(leads, p.nvars(), order), order);

  Poly r(p.nvars());
  Poly h = weak_nf(p, reducers, order);
  while (!h.is_zero()) {
    LeadingTerm lt = leading_term(h, order);
    if (lt.exps.total_degree() > options.degree_cap)
      throw ResourceError("normal form tail exceeds degree cap " + std::to_string(options.degree_cap));
    Poly term = Poly::monomial(lt.exps, lt.coeff);
    r += term;
    h = weak_nf(h - term, reducers, order);
  }
  return r;
}

StandardBasis standard_basis(std::span<const Poly> gens, const LocalOrder& order, const StandardBasisOptions& options) {
  std::size_t nvars = order.nvars();
  struct Pair {
    std::size_t i;
    std::size_t j;
    ExponentVector lcm;
  };
  std::vector<Reducer> G;
  std::vector<Pair> pairs;
  bool unit_ideal = false;

  auto add = [&](const Poly& h) {
    Reducer r = make_reducer(monic(h, order), order);
    if (r.lead.is_zero()) unit_ideal = true;
    for (std::size_t k = 0; k < G.size(); ++k) pairs.push_back({k, G.size(), G[k].lead.lcm(r.lead)});
    G.push_back(std::move(r));
  };

  bool any_nonzero = false;
  for (const Poly& g : gens) {
    if (g.nvars() != nvars) throw DomainError(ErrorCategory::InvalidArgument, "variable-count mismatch in ideal generators");
    if (g.is_zero()) continue;
    any_nonzero = true;
    Poly h = weak_nf(g, G, order);
    if (!h.is_zero()) add(h);
    if (unit_ideal) break;
  }
  if (!any_nonzero) throw DomainError(ErrorCategory::ZeroInput, "all ideal generators are zero");

  while (!pairs.empty() && !unit_ideal) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      auto da = a.lcm.total_degree();
      auto db = b.lcm.total_degree();
      if (da != db) return da < db;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pair = *best;
    pairs.erase(best);
    const Reducer& gi = G[pair.i];
    const Reducer& gj = G[pair.j];
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (pair.lcm.total_degree() == gi.lead.total_degree() + gj.lead.total_degree()) continue;
    if (pair.lcm.total_degree() > options.degree_cap)
      throw ResourceError("S-pair degree " + std::to_string(pair.lcm.total_degree()) + " exceeds degree cap " +
                          std::to_string(options.degree_cap));
    Poly s = gi.poly.mul_term(pair.lcm - gi.lead, gi.lead_coeff.inverse()) -
             gj.poly.mul_term(pair.lcm - gj.lead, gj.lead_coeff.inverse());
    Poly h = weak_nf(std::move(s), G, order);
    if (!h.is_zero()) add(h);
  }

  if (unit_ideal) return StandardBasis(order, {Poly::constant(nvars, GaussRational(1))});
  return finalize(std::move(G), nvars, order);
}

std::optional<std::size_t> local_quotient_dimension(std::span<const Poly> gens, const StandardBasisOptions& options) {
  if (gens.empty()) return std::nullopt;
  std::size_t nvars = gens.front().nvars();
  if (std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.is_zero(); })) {
    if (nvars == 0) return 1;
    return std::nullopt;
  }
  StandardBasis sb = standard_basis(gens, LocalOrder(nvars), options);
  auto monomials = sb.standard_monomials();
  if (!monomials) return std::nullopt;
  return monomials->size();
}

std::vector<Poly> jacobian_ideal(const Poly& f) {
  std::vector<Poly> out;
  for (std::size_t v = 0; v < f.nvars(); ++v) out.push_back(partial(f, v));
  return out;
}

MilnorNumber milnor_number(const Poly& f, const StandardBasisOptions& options) {
  if (!f.constant_term().is_zero())
    throw DomainError(ErrorCategory::NotInMaximalIdeal, "f(0) != 0: the Milnor number is defined for f in the maximal ideal");
  auto dim = local_quotient_dimension(jacobian_ideal(f), options);
  return dim ? MilnorNumber::finite(*dim) : MilnorNumber::infinity();
}

LocalAlgebraBasis local_algebra_basis(const Poly& f, const StandardBasisOptions& options) {
  if (!f.constant_term().is_zero())
    throw DomainError(ErrorCategory::NotInMaximalIdeal, "f(0) != 0: the local algebra is defined for f in the maximal ideal");
  std::vector<Poly> jac = jacobian_ideal(f);
  if (std::all_of(jac.begin(), jac.end(), [](const Poly& g) { return g.is_zero(); }))
    throw DomainError(ErrorCategory::NonIsolated, "singularity is not isolated (Jacobian ideal is zero)");
  auto monomials = standard_basis(jac, LocalOrder(f.nvars()), options).standard_monomials();
  if (!monomials) throw DomainError(ErrorCategory::NonIsolated, "singularity is not isolated (infinite Milnor number)");
  return {std::move(*monomials)};
}

bool is_isolated_singularity(const Poly& f, const StandardBasisOptions& options) {
  return !milnor_number(f, options).infinite;
}

}  // namespace leviform
