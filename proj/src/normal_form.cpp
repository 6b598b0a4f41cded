#include "leviform/normal_form.hpp"

#include <algorithm>

#include "leviform/errors.hpp"
#include "leviform/format.hpp"
#include "leviform/json_io.hpp"

namespace leviform {

namespace {

// Ascending total degree, then display order within a degree.
void sort_for_slots(std::vector<ExponentVector>& ms) {
  std::sort(ms.begin(), ms.end(), [](const ExponentVector& a, const ExponentVector& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return display_before(a, b);
  });
}

std::vector<TemplateSlot> name_slots(std::vector<ExponentVector> ms) {
  sort_for_slots(ms);
  std::vector<TemplateSlot> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back({std::move(ms[i]), "c" + std::to_string(i + 1)});
  return out;
}

// All monomials in n variables of total degree exactly d.
void monomials_of_degree(std::size_t n, std::uint32_t d, std::vector<ExponentVector>& out) {
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  if (n > 0) rec(rec, 0, d);
}

Poly lowest_holomorphic_part(const HermitianPoly& F) {
  Poly hol = F.holomorphic_block();
  if (hol.is_zero())
    throw DomainError(ErrorCategory::PrincipalPart, "F has no pure holomorphic terms, so it is not Re(P) + h.o.t.");
  return hol;
}

void require_flat(const LeviCertificate& cert) {
  if (!cert.flat()) throw DomainError(ErrorCategory::NotLeviFlat, "the hypersurface is not Levi-flat");
}

}  // namespace

std::size_t determinacy_bound(const Poly& f, const StandardBasisOptions& options) {
  MilnorNumber mu = milnor_number(f, options);
  if (mu.infinite) throw DomainError(ErrorCategory::NonIsolated, "singularity at 0 is not isolated");
  return mu.value + 1;
}

NormalFormTemplate arnold_template(const Poly& Q, const StandardBasisOptions& options) {
  if (Q.is_zero()) throw DomainError(ErrorCategory::ZeroInput, "the zero polynomial has no normal form");
  auto weights = find_weights(newton_support(Q));
  if (!weights) throw DomainError(ErrorCategory::NotQuasihomogeneous, "no positive weights put the support of Q on one diagonal");
  LocalAlgebraBasis basis = local_algebra_basis(Q, options);

  std::vector<ExponentVector> above;
  for (const auto& m : basis.monomials)
    if (weighted_degree(m, *weights) > 1) above.push_back(m);

  NormalFormTemplate t;
  t.base = Q;
  t.extras = name_slots(std::move(above));
  t.mu = basis.mu();
  t.degree_bound = t.mu + 1;
  t.weights = *weights;
  return t;
}

Theorem1Result theorem1_template(const HermitianPoly& F, const StandardBasisOptions& options) {
  Poly hol = lowest_holomorphic_part(F);
  auto k = static_cast<std::uint64_t>(hol.order());
  Poly P = GaussRational(2) * hol.homogeneous_part(k);

  Poly split = F.as_split_poly();
  Poly expected = HermitianPoly::real_part(P).as_split_poly();
  if (static_cast<std::uint64_t>(split.order()) != k || split.homogeneous_part(k) != expected)
    throw DomainError(ErrorCategory::PrincipalPart,
                      "lowest-order part of F is not Re(P) for a homogeneous holomorphic P");
  if (k < 2) throw DomainError(ErrorCategory::PrincipalPart, "principal part has degree 1, the hypersurface is smooth");

  NormalFormTemplate refined = arnold_template(P, options);  // throws NonIsolated
  LeviCertificate cert = is_levi_flat(F);
  require_flat(cert);

  NormalFormTemplate coarse;
  coarse.base = P;
  coarse.mu = refined.mu;
  coarse.degree_bound = refined.mu + 1;
  std::vector<ExponentVector> slots;
  for (auto d = static_cast<std::uint32_t>(k + 1); d <= coarse.degree_bound; ++d)
    monomials_of_degree(P.nvars(), d, slots);
  coarse.extras = name_slots(std::move(slots));
  return {std::move(coarse), std::move(refined), std::move(cert)};
}

NormalFormTemplate theorem2_template(const HermitianPoly& F, const StandardBasisOptions& options) {
  Poly hol = lowest_holomorphic_part(F);
  SemiQhDecomposition split;
  try {
    split = semiqh_split(GaussRational(2) * hol, options);
  } catch (const DomainError& e) {
    if (e.category() != ErrorCategory::NotSemiquasihomogeneous) throw;
    Poly lowest = hol.homogeneous_part(static_cast<std::uint64_t>(hol.order()));
    if (milnor_number(lowest, options).infinite)
      throw DomainError(ErrorCategory::NonIsolated, "principal part has a non-isolated singularity");
    throw;
  }

  std::size_t n = F.nvars();
  for (const auto& [key, c] : F.table()) {
    const auto& [mu, nu] = key;
    if (mu.is_zero() || nu.is_zero()) continue;
    if (weighted_degree(mu, split.weights) + weighted_degree(nu, split.weights) <= 1)
      throw DomainError(ErrorCategory::PrincipalPart,
                        "a mixed term of F lies on or below the diagonal of the principal part");
  }
  // Pure antiholomorphic terms mirror the holomorphic ones by reality.

  NormalFormTemplate t = arnold_template(split.q, options);
  require_flat(is_levi_flat(F));
  t.heuristic = n < 3;
  return t;
}

std::string to_string(const NormalFormTemplate& t) {
  auto names = holomorphic_names(t.base.nvars());
  std::string out = to_string(t.base, names);
  for (const auto& slot : t.extras) {
    out += " + " + slot.name;
    if (!slot.monomial.is_zero()) out += "*" + monomial_to_string(slot.monomial, names);
  }
  return out;
}

nlohmann::json to_json(const NormalFormTemplate& t) {
  nlohmann::json extras = nlohmann::json::array();
  for (const auto& s : t.extras) extras.push_back({{"monomial", to_json(s.monomial)}, {"name", s.name}});
  nlohmann::json j = {{"base", to_json(t.base)},
                      {"extras", std::move(extras)},
                      {"mu", t.mu},
                      {"bound", t.degree_bound},
                      {"heuristic", t.heuristic}};
  if (t.weights) j["weights"] = to_json(*t.weights);
  return j;
}

NormalFormTemplate template_from_json(const nlohmann::json& j) {
  auto malformed = [] { return DomainError(ErrorCategory::InvalidArgument, "malformed template JSON"); };
  if (!j.is_object()) throw malformed();
  for (const char* key : {"base", "extras", "mu", "bound", "heuristic"})
    if (!j.contains(key)) throw malformed();
  if (!j.at("extras").is_array() || !j.at("mu").is_number_unsigned() || !j.at("bound").is_number_unsigned() ||
      !j.at("heuristic").is_boolean())
    throw malformed();
  NormalFormTemplate t;
  t.base = poly_from_json(j.at("base"));
  for (const auto& s : j.at("extras")) {
    if (!s.is_object() || !s.contains("monomial") || !s.contains("name") || !s.at("name").is_string())
      throw malformed();
    ExponentVector m = exponent_from_json(s.at("monomial"));
    if (m.size() != t.base.nvars()) throw malformed();
    t.extras.push_back({std::move(m), s.at("name").get<std::string>()});
  }
  t.mu = j.at("mu").get<std::size_t>();
  t.degree_bound = j.at("bound").get<std::size_t>();
  t.heuristic = j.at("heuristic").get<bool>();
  if (j.contains("weights")) t.weights = weights_from_json(j.at("weights"));
  return t;
}

}  // namespace leviform
