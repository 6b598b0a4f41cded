#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "leviform/errors.hpp"
#include "leviform/format.hpp"
#include "leviform/parser.hpp"
#include "oracles.hpp"

using namespace leviform;

namespace {

GaussRational half(long num = 1) { return GaussRational(mpq_class(num, 2)); }

std::string monomial_text(const std::vector<std::uint32_t>& mu, const std::vector<std::uint32_t>& nu) {
  std::string out = "1";
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j]) out += "*z" + std::to_string(j + 1) + "^" + std::to_string(mu[j]);
    if (nu[j]) out += "*conj(z" + std::to_string(j + 1) + ")^" + std::to_string(nu[j]);
  }
  return out;
}

}  // namespace

TEST_CASE("holomorphic examples") {
  Poly f = parse_holomorphic("x^2*y + y^3", 2);
  CHECK(f.term_count() == 2);
  CHECK(f.coefficient({2, 1}) == GaussRational(1));
  CHECK(f.coefficient({0, 3}) == GaussRational(1));
  CHECK(parse_holomorphic("x^5 + y^5", 2) == parse_holomorphic("z1^5+z2^5", 2));
  CHECK(parse_holomorphic("(x+y)^2 - x^2 - y^2 - 2*x*y", 2).is_zero());
}

TEST_CASE("holomorphic syntax details") {
  CHECK(parse_holomorphic("2x y", 2) == parse_holomorphic("2*x*y", 2));
  CHECK(parse_holomorphic("-x^2", 2) == -parse_holomorphic("x^2", 2));
  CHECK(parse_holomorphic("x/3", 2) == GaussRational(mpq_class(1, 3)) * parse_holomorphic("x", 2));
  CHECK(parse_holomorphic("z3", 3) == Poly::variable(3, 2));
  CHECK(parse_holomorphic("2^3*x", 2) == parse_holomorphic("8*x", 2));
  CHECK(parse_holomorphic("x^2\n  + y^3", 2).term_count() == 2);
}

TEST_CASE("holomorphic errors carry positions") {
  auto position = [](const char* src, std::size_t n) {
    try {
      parse_holomorphic(src, n);
    } catch (const ParseError& e) {
      CHECK(e.category() == ErrorCategory::ParseError);
      return std::pair{e.line(), e.column()};
    }
    FAIL("no parse error for " << src);
    return std::pair{0, 0};
  };
  CHECK(position("x^2 + * y", 2) == std::pair{1, 7});
  CHECK(position("x\n+ conj(y)", 2) == std::pair{2, 3});
  CHECK(position("x^y", 2) == std::pair{1, 3});
  CHECK(position("x^1.5", 2) == std::pair{1, 4});
  CHECK(position("z4", 3) == std::pair{1, 1});
  CHECK(position("x/y", 2) == std::pair{1, 2});
  CHECK(position("(x+y", 2).first == 1);
  CHECK(position("x^-2", 2).first == 1);
  CHECK(position("x/0", 2) == std::pair{1, 2});
  CHECK(position("Re(x)", 2) == std::pair{1, 1});
  CHECK(position("w", 2) == std::pair{1, 1});
  CHECK_THROWS_AS(parse_holomorphic("x", 0), DomainError);
  CHECK_THROWS_AS(parse_holomorphic("x", 3), ParseError);  // aliases only for n = 2
}

TEST_CASE("real-analytic examples") {
  HermitianPoly F = parse_real_analytic("Re(x^2*y + y^3)", 2);
  CHECK(F.table().size() == 4);
  CHECK(F.coefficient({2, 1}, {0, 0}) == half());
  CHECK(F.coefficient({0, 0}, {2, 1}) == half());
  CHECK(F.coefficient({0, 3}, {0, 0}) == half());
  CHECK(F.coefficient({0, 0}, {0, 3}) == half());

  HermitianPoly G = parse_real_analytic("z1*conj(z1)", 1);
  CHECK(G.table().size() == 1);
  CHECK(G.coefficient({1}, {1}) == GaussRational(1));

  try {
    parse_real_analytic("i*z1", 1);
    FAIL("expected NOT_REAL_VALUED");
  } catch (const DomainError& e) {
    CHECK(e.category() == ErrorCategory::NotRealValued);
  }
}

TEST_CASE("real-analytic operators") {
  CHECK(parse_real_analytic("Im(z1)", 1) == parse_real_analytic("-i/2*z1 + i/2*conj(z1)", 1));
  CHECK(parse_real_analytic("Re(i*z1)", 1) == parse_real_analytic("-Im(z1)", 1));
  CHECK(parse_real_analytic("conj(z1*conj(z2)) + z1*conj(z2)", 2) ==
        parse_real_analytic("2*Re(z1*conj(z2))", 2));
  CHECK(parse_real_analytic("Re(z1)^2", 1) == parse_real_analytic("Re(z1^2)/2 + z1*conj(z1)/2", 1));
  CHECK_THROWS_AS(parse_real_analytic("Re(Im(z1))", 1), ParseError);
  CHECK_THROWS_AS(parse_real_analytic("Re(z1) + 1", 1), DomainError);  // F(0) != 0
  CHECK_THROWS_AS(parse_real_analytic("conj(z1", 1), ParseError);
}

TEST_CASE("AST records structure") {
  ExprAst ast = parse_expression("x^2 - conj(y)", 2);
  REQUIRE(ast);
  CHECK(ast->kind == ExprNode::Kind::Sub);
  REQUIRE(ast->children.size() == 2);
  CHECK(ast->children[0]->kind == ExprNode::Kind::Pow);
  CHECK(ast->children[0]->exponent == 2);
  CHECK(ast->children[1]->kind == ExprNode::Kind::Conj);
  CHECK(ast->children[1]->column == 7);
}

TEST_CASE("print then parse is the identity on holomorphic polynomials") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    Poly p = oracle::random_poly(rng, n, 0, 5, 5);
    auto names = holomorphic_names(n);
    CHECK(parse_holomorphic(to_string(p, names), n) == p);
  }
}

TEST_CASE("print then parse is the identity on real-analytic functions") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 3;
    Poly h = oracle::random_poly(rng, n, 1, 4, 4);
    Poly mixed = oracle::random_poly(rng, 2 * n, 2, 4, 3);
    Poly split = HermitianPoly::real_part(h).as_split_poly();
    // mixed + its reflection is real-valued.
    Poly reflected(2 * n);
    for (const auto& [e, c] : mixed.terms())
      reflected += Poly::monomial(e.slice(n, n).concat(e.slice(0, n)), c.conj());
    split += mixed + reflected;
    split = split.filter([](const ExponentVector& e) { return !e.is_zero(); });
    HermitianPoly F = HermitianPoly::from_split_poly(n, split);
    CHECK(parse_real_analytic(to_string(F), n) == F);
  }
}

TEST_CASE("reality is accepted exactly when the table is Hermitian") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<std::uint32_t> exp(0, 2);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 2;
    bool make_real = trial % 2 == 0;
    std::string src = "0";
    for (int t = 0; t < 3; ++t) {
      std::vector<std::uint32_t> mu(n), nu(n);
      do {
        for (std::size_t j = 0; j < n; ++j) {
          mu[j] = exp(rng);
          nu[j] = exp(rng);
        }
      } while (std::all_of(mu.begin(), mu.end(), [](auto v) { return v == 0; }) &&
               std::all_of(nu.begin(), nu.end(), [](auto v) { return v == 0; }));
      GaussRational c = oracle::random_gauss(rng);
      if (c.is_zero()) c = GaussRational(1);
      src += " + (" + c.to_string() + ")*" + monomial_text(mu, nu);
      src += " + (" + c.conj().to_string() + ")*" + monomial_text(nu, mu);
    }
    if (!make_real) {
      // i times a real nonconstant term breaks F = conj(F).
      src += " + i*(z1 + conj(z1))";
    }
    bool ok = true;
    try {
      parse_real_analytic(src, n);
    } catch (const DomainError& e) {
      CHECK(e.category() == ErrorCategory::NotRealValued);
      ok = false;
    }
    CHECK(ok == make_real);
    (ok ? accepted : rejected)++;
  }
  CHECK(accepted == 25);
  CHECK(rejected == 25);
}
