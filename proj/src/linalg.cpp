#include "leviform/linalg.hpp"

#include "leviform/errors.hpp"

namespace leviform {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<GaussRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussRational(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<GaussRational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DomainError(ErrorCategory::InvalidArgument, "matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<GaussRational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    GaussRational inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      GaussRational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::optional<Matrix> invert(const Matrix& m) {
  std::size_t n = m.size();
  Matrix aug(n, std::vector<GaussRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError(ErrorCategory::InvalidArgument, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = GaussRational(1);
  }
  RowEchelon re = row_reduce(std::move(aug));
  if (re.rank() < n || re.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, std::vector<GaussRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = re.rows[i][n + j];
  return inv;
}

Poly substitute_linear(const Poly& p, const Matrix& a) {
  std::size_t n = p.nvars();
  if (a.size() != n) throw DomainError(ErrorCategory::InvalidArgument, "matrix size does not match variable count");
  if (!invert(a)) throw DomainError(ErrorCategory::InvalidArgument, "singular substitution matrix");

  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly::TermMap row;
    for (std::size_t j = 0; j < n; ++j) row.emplace(ExponentVector::unit(n, j), a[i][j]);
    images.emplace_back(n, std::move(row));
  }
  // Cache powers of each image; the same power recurs across terms.
  std::vector<std::vector<Poly>> powers(n);
  auto power_of = [&](std::size_t var, std::uint32_t k) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly::constant(n, GaussRational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
    return cache[k];
  };

  Poly out(n);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

}  // namespace leviform
