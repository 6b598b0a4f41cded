#include "leviform/poly_gcd.hpp"

#include <map>

#include "leviform/errors.hpp"

namespace leviform {
namespace {

// Lex-leading term: the map is ordered lexicographically, so it is the last entry.
const std::pair<const ExponentVector, GaussRational>& lex_lead(const Poly& p) { return *p.terms().rbegin(); }

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return lex_lead(p).second.inverse() * p;
}

// Coefficients of p viewed as a univariate polynomial in `var`.
std::map<std::uint32_t, Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::map<std::uint32_t, Poly::TermMap> buckets;
  for (const auto& [e, c] : p.terms()) buckets[e[var]].emplace(e.with(var, 0), c);
  std::map<std::uint32_t, Poly> out;
  for (auto& [d, t] : buckets) out.emplace(d, Poly(p.nvars(), std::move(t)));
  return out;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.nvars());
  for (const auto& [d, c] : coefficients_in(p, var)) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, var);
  auto q = divide_exact(p, c);
  return *q;
}

// Pseudo-remainder of a by b with respect to `var`, deg_var(b) >= 1.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  std::uint32_t db = b.degree_in(var);
  Poly lcb = coefficients_in(b, var).rbegin()->second;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    auto coeffs = coefficients_in(a, var);
    auto [da, lca] = *coeffs.rbegin();
    Poly shift = lca.mul_term(ExponentVector::unit(a.nvars(), var, da - db), GaussRational(1));
    a = lcb * a - shift * b;
  }
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), GaussRational(1));

  std::size_t n = a.nvars();
  std::size_t var = n;
  for (std::size_t v = n; v-- > 0;) {
    if (a.uses_variable(v) || b.uses_variable(v)) {
      var = v;
      break;
    }
  }
  if (!a.uses_variable(var)) return gcd_impl(a, content_in(b, var));
  if (!b.uses_variable(var)) return gcd_impl(content_in(a, var), b);

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly r0 = *divide_exact(a, ca);
  Poly r1 = *divide_exact(b, cb);
  if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
  while (true) {
    Poly r = pseudo_remainder(r0, r1, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      r1 = Poly::constant(n, GaussRational(1));
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, var);
  }
  return monic(gcd_impl(ca, cb) * primitive_part(r1, var));
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DomainError(ErrorCategory::InvalidArgument, "variable-count mismatch");
  const auto& [lead_exp, lead_coeff] = lex_lead(b);
  GaussRational inv = lead_coeff.inverse();
  Poly quotient(a.nvars());
  Poly rest = a;
  while (!rest.is_zero()) {
    const auto& [e, c] = lex_lead(rest);
    if (!lead_exp.divides(e)) return std::nullopt;
    ExponentVector shift = e - lead_exp;
    GaussRational factor = c * inv;
    quotient += Poly::monomial(shift, factor);
    rest -= b.mul_term(shift, factor);
  }
  return quotient;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw DomainError(ErrorCategory::InvalidArgument, "variable-count mismatch");
  return gcd_impl(a, b);
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return monic(p);
  Poly g = p;
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v) g = gcd(g, partial(p, v));
  return monic(*divide_exact(p, g));
}

}  // namespace leviform
