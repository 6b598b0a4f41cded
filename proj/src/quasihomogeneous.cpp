#include "leviform/quasihomogeneous.hpp"

#include <algorithm>

#include "leviform/errors.hpp"
#include "leviform/linalg.hpp"

namespace leviform {

NewtonSupport newton_support(const Poly& f) {
  NewtonSupport s{f.nvars(), {}};
  for (const auto& [e, c] : f.terms()) s.points.insert(e);
  return s;
}

std::optional<WeightSystem> find_weights(const NewtonSupport& support) {
  if (support.points.empty()) throw DomainError(ErrorCategory::InvalidArgument, "empty Newton support");
  std::size_t n = support.nvars;

  WeightSystem w;
  w.alpha.assign(n, mpq_class(1, 2));
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < n; ++v) {
    bool appears = std::any_of(support.points.begin(), support.points.end(),
                               [v](const ExponentVector& k) { return k[v] > 0; });
    if (appears) {
      used.push_back(v);
    } else {
      w.ambiguous = true;
    }
  }
  if (used.empty()) return std::nullopt;  // only the constant monomial

  std::size_t m = used.size();
  Matrix augmented;
  for (const auto& k : support.points) {
    std::vector<GaussRational> row;
    for (std::size_t v : used) row.emplace_back(static_cast<long>(k[v]));
    row.emplace_back(1);
    augmented.push_back(std::move(row));
  }
  RowEchelon re = row_reduce(std::move(augmented));
  if (!re.pivots.empty() && re.pivots.back() == m) return std::nullopt;  // inconsistent

  std::vector<mpq_class> solution(m);
  if (re.rank() == m) {
    for (std::size_t r = 0; r < m; ++r) solution[re.pivots[r]] = re.rows[r][m].re();
  } else {
    // Minimum-norm point of {a : R a = c}: a = R^T (R R^T)^{-1} c.
    w.ambiguous = true;
    Matrix rows;
    Matrix rhs;
    for (const auto& row : re.rows) {
      rows.emplace_back(row.begin(), row.begin() + static_cast<long>(m));
      rhs.push_back({row[m]});
    }
    Matrix rt = transpose(rows);
    auto gram_inv = invert(multiply(rows, rt));
    Matrix a = multiply(rt, multiply(*gram_inv, rhs));
    for (std::size_t v = 0; v < m; ++v) solution[v] = a[v][0].re();
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (sgn(solution[v]) <= 0) return std::nullopt;
    w.alpha[used[v]] = solution[v];
  }
  return w;
}

mpq_class weighted_degree(const ExponentVector& m, const WeightSystem& w) {
  if (m.size() != w.alpha.size()) throw DomainError(ErrorCategory::InvalidArgument, "weight vector length mismatch");
  mpq_class d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += w.alpha[i] * m[i];
  return d;
}

bool is_quasihomogeneous(const Poly& f, const WeightSystem& w) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return weighted_degree(t.first, w) == w.d; });
}

SemiQhDecomposition semiqh_split(const Poly& f, const StandardBasisOptions& options) {
  if (f.is_zero()) throw DomainError(ErrorCategory::ZeroInput, "cannot split the zero polynomial");
  if (!f.constant_term().is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "f(0) != 0");

  std::string last_reason = "no candidate principal part admits positive weights";
  std::set<std::vector<mpq_class>> tried;
  auto attempt = [&](const WeightSystem& w) -> std::optional<SemiQhDecomposition> {
    if (!tried.insert(w.alpha).second) return std::nullopt;
    bool below = std::any_of(f.terms().begin(), f.terms().end(),
                             [&](const auto& t) { return weighted_degree(t.first, w) < 1; });
    if (below) {
      last_reason = "terms fall below the diagonal of every candidate weight system";
      return std::nullopt;
    }
    Poly q = f.filter([&](const ExponentVector& e) { return weighted_degree(e, w) == 1; });
    if (milnor_number(q, options).infinite) {
      last_reason = "quasihomogeneous part has infinite Milnor number";
      return std::nullopt;
    }
    return SemiQhDecomposition{q, f - q, w};
  };

  // Lowest ordinary degrees first.
  std::set<std::uint64_t> degrees;
  for (const auto& [e, c] : f.terms()) degrees.insert(e.total_degree());
  for (std::uint64_t bound : degrees) {
    Poly candidate = f.filter([bound](const ExponentVector& e) { return e.total_degree() <= bound; });
    if (auto w = find_weights(newton_support(candidate)))
      if (auto split = attempt(*w)) return *split;
  }

  // A degree prefix can mix the diagonal with terms above it. Any isolated
  // principal part contains n support points that pin its weights down, so
  // try every such n-subset, again lowest degrees first.
  std::vector<ExponentVector> points;
  for (const auto& [e, c] : f.terms()) points.push_back(e);
  std::stable_sort(points.begin(), points.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return a.total_degree() < b.total_degree();
  });
  std::size_t n = f.nvars();
  auto fail = [&] {
    return DomainError(ErrorCategory::NotSemiquasihomogeneous, "not semiquasihomogeneous: " + last_reason);
  };
  if (n == 0 || points.size() < n) throw fail();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    NewtonSupport support{n, {}};
    for (std::size_t i : pick) support.points.insert(points[i]);
    if (auto w = find_weights(support); w && !w->ambiguous)
      if (auto split = attempt(*w)) return *split;
    // Next combination in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == points.size() - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw fail();
}

nlohmann::json to_json(const WeightSystem& w) {
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& a : w.alpha) alpha.push_back(rational_to_string(a));
  return {{"alpha", std::move(alpha)}, {"d", rational_to_string(w.d)}};
}

WeightSystem weights_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("d") || !j.at("alpha").is_array() ||
      !j.at("d").is_string())
    throw DomainError(ErrorCategory::InvalidArgument, "malformed JSON: expected {\"alpha\": [...], \"d\": \"...\"}");
  WeightSystem w;
  for (const auto& a : j.at("alpha")) {
    if (!a.is_string()) throw DomainError(ErrorCategory::InvalidArgument, "malformed JSON: weights must be strings");
    w.alpha.push_back(rational_from_string(a.get<std::string>()));
  }
  w.d = rational_from_string(j.at("d").get<std::string>());
  return w;
}

}  // namespace leviform
