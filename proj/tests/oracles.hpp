#pragma once

// Brute-force reference computations used to cross-check the library. They
// share only Poly/GaussRational with the code under test.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "leviform/hermitian_poly.hpp"
#include "leviform/poly.hpp"

namespace oracle {

using leviform::ExponentVector;
using leviform::GaussRational;
using leviform::HermitianPoly;
using leviform::Poly;

/// Rank of a dense matrix by plain Gaussian elimination.
std::size_t rank(std::vector<std::vector<GaussRational>> rows);

/// All monomials in n variables of total degree < bound.
std::vector<ExponentVector> monomials_below(std::size_t n, std::uint32_t bound);

/// dim O_n / (<gens> + m^N), by linear algebra on truncated multiples.
std::size_t truncated_quotient_dimension(const std::vector<Poly>& gens, std::size_t n, std::uint32_t N);

/// dim O_n / <gens>: increases N until the truncated dimension stops
/// growing, which by Nakayama means m^N lies in the ideal. nullopt if it
/// has not stabilized by max_N.
std::optional<std::size_t> quotient_dimension(const std::vector<Poly>& gens, std::size_t n,
                                              std::uint32_t max_N = 24);

/// Whether `monomials` project to a vector-space basis of O_n / <gens>
/// (the ideal must be m-primary with quotient stable by max_N).
bool is_quotient_basis(const std::vector<Poly>& gens, std::size_t n, const std::vector<ExponentVector>& monomials,
                       std::uint32_t max_N = 24);

/// Milnor number from the partial derivatives of f.
std::optional<std::size_t> milnor(const Poly& f, std::uint32_t max_N = 24);

/// Values of the Levi form L(v) = sum F_{z_j zbar_k}(p) v_j conj(v_k) at a
/// point p of {F = 0} with dF(p) != 0, over a spanning set of complex
/// tangent vectors. Throws std::invalid_argument when p is not a smooth
/// point of the hypersurface.
std::vector<GaussRational> levi_form_values(const HermitianPoly& F, const std::vector<GaussRational>& point);

/// Random helpers with explicit engines so every test is reproducible.
GaussRational random_gauss(std::mt19937_64& rng, int span = 5, bool real_only = false);
/// Random polynomial in n variables with degree range [min_deg, max_deg].
Poly random_poly(std::mt19937_64& rng, std::size_t n, std::uint32_t min_deg, std::uint32_t max_deg,
                 std::size_t terms, bool real_only = false);
/// Random invertible n x n matrix with small integer entries.
std::vector<std::vector<GaussRational>> random_invertible(std::mt19937_64& rng, std::size_t n);

}  // namespace oracle
