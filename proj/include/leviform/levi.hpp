#pragma once

#include <optional>
#include <utility>

#include "leviform/exterior_form.hpp"
#include "leviform/hermitian_poly.hpp"
#include "leviform/poly.hpp"
#include "leviform/standard_basis.hpp"

namespace leviform {

/// F_C(z, w) with zbar replaced by an independent w; F_C(z, zbar) = F(z).
BiPoly complexify(const HermitianPoly& F);

/// eta_C = i (d_z F_C - d_w F_C), a 1-form on C^{2n}.
ExteriorForm levi_one_form(const BiPoly& Fc);

/// (alpha, beta) with dF_C = alpha + beta, alpha the dz-part and beta the dw-part.
std::pair<ExteriorForm, ExteriorForm> levi_form_restriction_split(const BiPoly& Fc);

/// Omega ^ dF_C where Omega = (d_z F_C - d_w F_C) ^ sum_{j,k} F_{z_j w_k} dz_j ^ dw_k.
/// The hypersurface is Levi-flat exactly when this 4-form vanishes on
/// {F_C = 0}. For n == 1 there are no nonzero 4-forms on C^2 and the zero
/// form of top degree 2 is returned.
ExteriorForm levi_obstruction(const BiPoly& Fc);

struct LeviWitness {
  ExteriorForm::Index index;
  /// Coefficient of the obstruction at `index`; not divisible by `divisor`.
  Poly coefficient;
};

struct LeviCertificate {
  enum class Verdict { Flat, NotFlat };
  Verdict verdict = Verdict::Flat;
  /// Square-free part of F_C that every obstruction coefficient was tested against.
  Poly divisor;
  /// Set iff verdict is NotFlat: the first failing coefficient in index order.
  std::optional<LeviWitness> witness;

  bool flat() const noexcept { return verdict == Verdict::Flat; }
};

const char* verdict_name(LeviCertificate::Verdict v);

/// Tests whether every coefficient of levi_obstruction(complexify(F)) is
/// divisible by the square-free part of F_C. Throws ZeroInput when F == 0.
LeviCertificate is_levi_flat(const HermitianPoly& F);

/// True iff <F_C, dF_C/dz_j, dF_C/dw_j> is zero-dimensional in the local ring
/// of C^{2n} at 0, so sing(M_C) is at most the origin.
bool singular_locus_is_origin(const HermitianPoly& F, const StandardBasisOptions& options = {});

}  // namespace leviform
