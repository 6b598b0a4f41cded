#include "leviform/levi.hpp"

#include "leviform/errors.hpp"
#include "leviform/poly_gcd.hpp"

namespace leviform {

BiPoly complexify(const HermitianPoly& F) { return BiPoly(F.nvars(), F.as_split_poly()); }

std::pair<ExteriorForm, ExteriorForm> levi_form_restriction_split(const BiPoly& Fc) {
  std::size_t n = Fc.n();
  ExteriorForm alpha(n, 1);
  ExteriorForm beta(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    alpha.add_term({static_cast<std::uint8_t>(j)}, partial(Fc.poly(), Fc.z_index(j)));
    beta.add_term({static_cast<std::uint8_t>(n + j)}, partial(Fc.poly(), Fc.w_index(j)));
  }
  return {alpha, beta};
}

ExteriorForm levi_one_form(const BiPoly& Fc) {
  auto [alpha, beta] = levi_form_restriction_split(Fc);
  return GaussRational::imaginary_unit() * (alpha - beta);
}

ExteriorForm levi_obstruction(const BiPoly& Fc) {
  std::size_t n = Fc.n();
  if (n < 2) return ExteriorForm(n, 2 * n);

  auto [alpha, beta] = levi_form_restriction_split(Fc);
  ExteriorForm mixed(n, 2);
  for (std::size_t j = 0; j < n; ++j) {
    Poly dz = partial(Fc.poly(), Fc.z_index(j));
    for (std::size_t k = 0; k < n; ++k)
      mixed.add_term({static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(n + k)},
                     partial(dz, Fc.w_index(k)));
  }
  if (mixed.is_zero()) return ExteriorForm(n, 4);
  ExteriorForm omega = wedge(alpha - beta, mixed);
  return wedge(omega, alpha + beta);
}

const char* verdict_name(LeviCertificate::Verdict v) {
  return v == LeviCertificate::Verdict::Flat ? "FLAT" : "NOT_FLAT";
}

LeviCertificate is_levi_flat(const HermitianPoly& F) {
  if (F.is_zero()) throw DomainError(ErrorCategory::ZeroInput, "the zero function defines no hypersurface");
  BiPoly Fc = complexify(F);
  LeviCertificate cert;
  cert.divisor = square_free_part(Fc.poly());
  ExteriorForm obstruction = levi_obstruction(Fc);
  for (const auto& [index, coef] : obstruction.terms()) {
    if (!divide_exact(coef, cert.divisor)) {
      cert.verdict = LeviCertificate::Verdict::NotFlat;
      cert.witness = LeviWitness{index, coef};
      break;
    }
  }
  return cert;
}

bool singular_locus_is_origin(const HermitianPoly& F, const StandardBasisOptions& options) {
  if (F.is_zero()) return false;
  BiPoly Fc = complexify(F);
  std::vector<Poly> gens{Fc.poly()};
  for (std::size_t v = 0; v < Fc.poly().nvars(); ++v) gens.push_back(partial(Fc.poly(), v));
  return local_quotient_dimension(gens, options).has_value();
}

}  // namespace leviform
