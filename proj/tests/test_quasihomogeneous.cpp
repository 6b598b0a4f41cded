#include <doctest.h>

#include <random>

#include "leviform/errors.hpp"
#include "leviform/parser.hpp"
#include "leviform/quasihomogeneous.hpp"
#include "oracles.hpp"

using namespace leviform;

namespace {

Poly P(const char* s, std::size_t n = 2) { return parse_holomorphic(s, n); }

std::vector<mpq_class> alpha(std::initializer_list<mpq_class> xs) { return xs; }

ErrorCategory category_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.category();
  }
  FAIL("expected a domain error");
  return ErrorCategory::InvalidArgument;
}

}  // namespace

TEST_CASE("newton_support examples") {
  CHECK(newton_support(P("x^2*y+y^3")).points == std::set<ExponentVector>{{2, 1}, {0, 3}});
  CHECK(newton_support(Poly(2)).points.empty());
  CHECK(newton_support(P("x^5+y^5+x^3*y^3")).points == std::set<ExponentVector>{{5, 0}, {0, 5}, {3, 3}});
}

TEST_CASE("find_weights examples") {
  auto w = find_weights(newton_support(P("x^2*y+y^3")));
  REQUIRE(w);
  CHECK(w->alpha == alpha({mpq_class(1, 3), mpq_class(1, 3)}));
  CHECK(w->d == 1);
  CHECK_FALSE(w->ambiguous);

  auto w2 = find_weights(newton_support(P("x^2*y+y^4")));
  REQUIRE(w2);
  CHECK(w2->alpha == alpha({mpq_class(3, 8), mpq_class(1, 4)}));

  CHECK_FALSE(find_weights(newton_support(P("x^2+x^3"))).has_value());
  CHECK_THROWS_AS(find_weights(newton_support(Poly(2))), DomainError);
}

TEST_CASE("find_weights edge cases") {
  // Inconsistent: x^2, y^2 and x*y^2 cannot share a diagonal.
  CHECK_FALSE(find_weights(newton_support(P("x^2+y^2+x*y^2"))).has_value());
  // A constant term can never have weighted degree 1.
  CHECK_FALSE(find_weights(newton_support(P("1+x"))).has_value());
  // x^3*y forces a negative weight on y.
  CHECK_FALSE(find_weights(newton_support(P("x^2+x^3*y"))).has_value());

  // An absent variable gets weight 1/2 and the result is flagged.
  auto w = find_weights(newton_support(P("z1^3", 2)));
  REQUIRE(w);
  CHECK(w->alpha == alpha({mpq_class(1, 3), mpq_class(1, 2)}));
  CHECK(w->ambiguous);

  // Underdetermined system: minimum-norm solution of 2a + 2b = 1.
  auto u = find_weights(newton_support(P("x^2*y^2")));
  REQUIRE(u);
  CHECK(u->alpha == alpha({mpq_class(1, 4), mpq_class(1, 4)}));
  CHECK(u->ambiguous);
}

TEST_CASE("homogeneous polynomials get equal weights") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + t % 2;
    auto k = static_cast<std::uint32_t>(2 + t % 4);
    Poly f(n);
    for (std::size_t j = 0; j < n; ++j) f += Poly::monomial(ExponentVector::unit(n, j, k));
    f += oracle::random_poly(rng, n, k, k, 3);
    auto w = find_weights(newton_support(f));
    REQUIRE(w);
    for (const auto& a : w->alpha) CHECK(a == mpq_class(1, k));
    CHECK_FALSE(w->ambiguous);
  }
}

TEST_CASE("successful weights put every support point on the diagonal") {
  std::mt19937_64 rng(37);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    Poly f = oracle::random_poly(rng, 2 + t % 2, 1, 6, 2 + t % 3);
    if (f.is_zero()) continue;
    auto w = find_weights(newton_support(f));
    if (!w) continue;
    ++found;
    for (const auto& a : w->alpha) CHECK(sgn(a) > 0);
    for (const auto& [e, c] : f.terms()) CHECK(weighted_degree(e, *w) == 1);
    CHECK(is_quasihomogeneous(f, *w));
  }
  CHECK(found > 20);
}

TEST_CASE("weighted_degree examples") {
  WeightSystem w{{mpq_class(1, 5), mpq_class(1, 5)}, 1, false};
  CHECK(weighted_degree({3, 3}, w) == mpq_class(6, 5));
  CHECK(weighted_degree({0, 0}, w) == 0);
  CHECK(weighted_degree({5, 0}, w) == 1);
  WeightSystem w3{{mpq_class(1, 2), mpq_class(1, 3), mpq_class(1, 7)}, 1, false};
  CHECK(weighted_degree({0, 0, 0}, w3) == 0);
}

TEST_CASE("semiqh_split examples") {
  auto s = semiqh_split(P("x^2*y+y^3+x^4"));
  CHECK(s.q == P("x^2*y+y^3"));
  CHECK(s.fprime == P("x^4"));
  CHECK(s.weights.alpha == alpha({mpq_class(1, 3), mpq_class(1, 3)}));

  auto t = semiqh_split(P("x^5+y^5"));
  CHECK(t.q == P("x^5+y^5"));
  CHECK(t.fprime.is_zero());

  CHECK(category_of([] { semiqh_split(P("x^2*y^2+y^5")); }) == ErrorCategory::NotSemiquasihomogeneous);
  CHECK(category_of([] { semiqh_split(Poly(2)); }) == ErrorCategory::ZeroInput);
  CHECK(category_of([] { semiqh_split(P("1+x^2")); }) == ErrorCategory::InvalidArgument);
}

TEST_CASE("semiqh_split widens past a degenerate lowest part") {
  // x^2*y alone is non-isolated; with y^4 the weights are (3/8, 1/4).
  auto s = semiqh_split(P("x^2*y+y^4+x^3*y"));
  CHECK(s.q == P("x^2*y+y^4"));
  CHECK(s.fprime == P("x^3*y"));
  CHECK(s.weights.alpha == alpha({mpq_class(3, 8), mpq_class(1, 4)}));
}

TEST_CASE("semiqh_split reassembles f") {
  std::mt19937_64 rng(41);
  const char* bases[] = {"x^2*y+y^3", "x^5+y^5", "x^2*y+y^4", "x^3+y^4", "z1^2+z2^3+z3^5"};
  for (const char* b : bases) {
    std::size_t n = std::string(b).find("z3") != std::string::npos ? 3 : 2;
    Poly q = P(b, n);
    auto w = *find_weights(newton_support(q));
    for (int t = 0; t < 10; ++t) {
      // Tail terms strictly above the diagonal.
      Poly tail = oracle::random_poly(rng, n, 2, 7, 3).filter(
          [&](const ExponentVector& e) { return weighted_degree(e, w) > 1; });
      Poly f = q + tail;
      auto s = semiqh_split(f);
      CHECK(s.q + s.fprime == f);
      CHECK(is_quasihomogeneous(s.q, s.weights));
      for (const auto& [e, c] : s.fprime.terms()) CHECK(weighted_degree(e, s.weights) > 1);
      CHECK_FALSE(milnor_number(s.q).infinite);
    }
  }
}

TEST_CASE("WeightSystem JSON") {
  WeightSystem w{{mpq_class(3, 8), mpq_class(1, 4)}, 1, false};
  CHECK(to_json(w).dump() == R"({"alpha":["3/8","1/4"],"d":"1"})");
  WeightSystem back = weights_from_json(to_json(w));
  CHECK(back.alpha == w.alpha);
  CHECK(back.d == 1);
  CHECK_THROWS_AS(weights_from_json(nlohmann::json::parse(R"({"alpha":[0.5],"d":"1"})")), DomainError);
}
