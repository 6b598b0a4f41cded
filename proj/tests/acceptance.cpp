// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leviform/levi.hpp"
#include "leviform/linalg.hpp"
#include "leviform/normal_form.hpp"
#include "leviform/parser.hpp"
#include "leviform/poly_gcd.hpp"
#include "leviform/quasihomogeneous.hpp"
#include "leviform/standard_basis.hpp"
#include "oracles.hpp"

using namespace leviform;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

Poly P(const char* s, std::size_t n = 2) { return parse_holomorphic(s, n); }

Poly fermat(std::size_t n, std::uint32_t k) {
  Poly f(n);
  for (std::size_t j = 0; j < n; ++j) f += Poly::monomial(ExponentVector::unit(n, j, k));
  return f;
}

bool divisibility_closed(const std::vector<ExponentVector>& ms) {
  std::set<ExponentVector> s(ms.begin(), ms.end());
  for (const auto& m : ms)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0 && !s.count(m.with(v, m[v] - 1))) return false;
  return true;
}

void criterion1(Outcome& o) {
  auto start = Clock::now();
  MilnorNumber mu = milnor_number(P("x^2*y+y^3"));
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  o.require(mu == MilnorNumber::finite(4), "mu(x^2*y+y^3) != 4");
  o.require(ms < 1000.0, "took longer than 1 s");
  if (o.pass) o.detail << "mu = 4 in " << ms << " ms";
}

void criterion2(Outcome& o) {
  for (std::uint32_t k = 3; k <= 6; ++k) {
    Poly f = P("x^2*y") + Poly::monomial({0, k});
    std::vector<ExponentVector> expected{{0, 0}, {1, 0}};
    for (std::uint32_t j = 1; j < k; ++j) expected.push_back({0, j});
    auto got = local_algebra_basis(f).monomials;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    o.require(got == expected, "basis of x^2*y+y^" + std::to_string(k));
    o.require(milnor_number(f) == MilnorNumber::finite(k + 1), "mu of x^2*y+y^" + std::to_string(k));
  }
  if (o.pass) o.detail << "k = 3..6: basis {1, x, y, ..., y^(k-1)}, mu = k+1";
}

void criterion3(Outcome& o) {
  auto t = arnold_template(P("x^2*y+y^3"));
  o.require(t.extras.empty(), "extra monomials present");
  o.require(t.base == P("x^2*y+y^3"), "base differs from Q");
  if (o.pass) o.detail << "template = " << to_string(t);
}

void criterion4(Outcome& o) {
  auto t = arnold_template(P("x^5+y^5"));
  o.require(t.extras.size() == 1 && t.extras[0].monomial == ExponentVector{3, 3}, "extras != {x^3*y^3}");
  o.require(to_string(t) == "x^5+y^5 + c1*x^3*y^3", "rendered as " + to_string(t));
  o.require(t.mu == 16, "mu != 16");
  auto brute = oracle::milnor(P("x^5+y^5"));
  o.require(brute && *brute == 16, "brute-force quotient dimension != 16");
  if (o.pass) o.detail << to_string(t) << ", mu = 16 (oracle agrees)";
}

void criterion5(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::string src = "Re(";
    for (std::size_t j = 1; j <= n; ++j) src += (j > 1 ? "+z" : "z") + std::to_string(j) + "^2";
    src += ")";
    auto r = theorem1_template(parse_real_analytic(src, n));
    std::string tag = " (n = " + std::to_string(n) + ")";
    o.require(r.coarse.mu == 1, "mu != 1" + tag);
    o.require(r.coarse.degree_bound == 2, "bound != 2" + tag);
    o.require(r.coarse.extras.empty() && r.refined.extras.empty(), "extras present" + tag);
    o.require(r.coarse.base == fermat(n, 2), "base != sum z_j^2" + tag);
  }
  if (o.pass) o.detail << "n = 2, 3: mu = 1, bound 2, no extras";
}

void criterion6(Outcome& o) {
  const std::pair<const char*, std::size_t> flat[] = {
      {"Re(z1)", 1}, {"Re(z1^2+z2^2)", 2}, {"Re(x^2*y+y^3)", 2}, {"Re(x^5+y^5)", 2}};
  for (const auto& [src, n] : flat) o.require(is_levi_flat(parse_real_analytic(src, n)).flat(), src);

  std::mt19937_64 rng(6006);
  int random_flat = 0;
  while (random_flat < 50) {
    std::size_t n = 2 + random_flat % 3;
    Poly h = oracle::random_poly(rng, n, 1, 5, 4);
    HermitianPoly F = HermitianPoly::real_part(h);
    if (F.is_zero()) continue;
    o.require(levi_obstruction(complexify(F)).is_zero(), "obstruction of a random Re(h) is nonzero");
    o.require(is_levi_flat(F).flat(), "random Re(h) not FLAT");
    ++random_flat;
  }

  HermitianPoly bad = parse_real_analytic("z1*conj(z1) + Re(z2)", 2);
  LeviCertificate cert = is_levi_flat(bad);
  o.require(!cert.flat() && cert.witness.has_value(), "z1*conj(z1)+Re(z2) not NOT_FLAT");
  if (cert.witness) {
    o.require(!divide_exact(cert.witness->coefficient, cert.divisor), "witness divisible by sqfree(F_C)");
    o.require(!divide_exact(cert.witness->coefficient, complexify(bad).poly()), "witness divisible by F_C");
  }
  auto levi = oracle::levi_form_values(bad, {GaussRational(1), GaussRational(-1)});
  o.require(!levi.empty() && !levi[0].is_zero(), "Levi form oracle vanishes at (1, -1)");
  if (o.pass) o.detail << "4 listed + 50 random Re(h) FLAT; witness verified for z1*conj(z1)+Re(z2)";
}

void criterion7(Outcome& o) {
  o.require(singular_locus_is_origin(parse_real_analytic("Re(x^2*y+y^3)", 2)), "Re(x^2*y+y^3) gave false");
  o.require(!singular_locus_is_origin(parse_real_analytic("Re(x^2*y^2)", 2)), "Re(x^2*y^2) gave true");
  if (o.pass) o.detail << "true for Re(x^2*y+y^3), false for Re(x^2*y^2)";
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(8008);
  int substitutions = 0;
  const char* polys[] = {"x^2*y+y^3", "x^5+y^5", "x^3+y^4", "x^2*y+y^4"};
  for (const char* s : polys) {
    Poly f = P(s);
    MilnorNumber mu = milnor_number(f);
    for (int t = 0; t < 20; ++t) {
      Matrix a = oracle::random_invertible(rng, 2);
      o.require(milnor_number(substitute_linear(f, a)) == mu, std::string("mu not invariant for ") + s);
      ++substitutions;
    }
  }
  Poly g3 = P("z1^2*z2+z2^3+z3^2", 3);
  for (int t = 0; t < 20; ++t) {
    o.require(milnor_number(substitute_linear(g3, oracle::random_invertible(rng, 3))) == MilnorNumber::finite(4),
              "mu not invariant in 3 variables");
    ++substitutions;
  }

  int fermat_cases = 0;
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::uint32_t k = 2; k <= 4; ++k) {
      std::size_t expected = 1;
      for (std::size_t j = 0; j < n; ++j) expected *= k - 1;
      Poly f = fermat(n, k);
      o.require(milnor_number(f) == MilnorNumber::finite(expected), "Fermat mu");
      auto brute = oracle::milnor(f);
      o.require(brute && *brute == expected, "Fermat oracle");
      ++fermat_cases;
    }

  int staircases = 0;
  const char* zoo[] = {"x^2*y+y^3", "x^5+y^5", "x^3+y^4", "x^2*y+y^6", "x^4+x^2*y^2+y^5", "x^3+x*y^3"};
  for (const char* s : zoo) {
    auto basis = local_algebra_basis(P(s)).monomials;
    o.require(divisibility_closed(basis), std::string("staircase not closed for ") + s);
    ++staircases;
  }
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::uint32_t k = 2; k <= 4; ++k) {
      o.require(divisibility_closed(local_algebra_basis(fermat(n, k)).monomials), "Fermat staircase");
      ++staircases;
    }

  int splits = 0;
  const char* bases[] = {"x^2*y+y^3", "x^5+y^5", "x^2*y+y^4", "x^3+y^4"};
  for (const char* b : bases) {
    Poly q = P(b);
    WeightSystem w = *find_weights(newton_support(q));
    for (int t = 0; t < 10; ++t) {
      Poly tail = oracle::random_poly(rng, 2, 2, 7, 3).filter(
          [&](const ExponentVector& e) { return weighted_degree(e, w) > 1; });
      Poly f = q + tail;
      SemiQhDecomposition s = semiqh_split(f);
      o.require(s.q + s.fprime == f, "split does not reassemble");
      bool above = std::all_of(s.fprime.terms().begin(), s.fprime.terms().end(),
                               [&](const auto& term) { return weighted_degree(term.first, s.weights) > 1; });
      o.require(above && is_quasihomogeneous(s.q, s.weights), "split parts off the diagonal");
      ++splits;
    }
  }
  if (o.pass)
    o.detail << substitutions << " substitutions, " << fermat_cases << " Fermat cases, " << staircases
             << " staircases, " << splits << " splits";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"milnor(x^2*y+y^3) = 4 in under 1 s", criterion1},
      {"local_algebra_basis(x^2*y+y^k), k = 3..6", criterion2},
      {"arnold_template(x^2*y+y^3) has no extras", criterion3},
      {"arnold_template(x^5+y^5) = x^5+y^5 + c1*x^3*y^3, mu = 16", criterion4},
      {"theorem1_template(Re(z1^2+...+zn^2)), n = 2, 3", criterion5},
      {"is_levi_flat on Re(h) and on z1*conj(z1)+Re(z2)", criterion6},
      {"singular_locus_is_origin", criterion7},
      {"property suite", criterion8},
  };

  auto start = Clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_budget = seconds < 60.0;
  std::printf("[%s] total runtime %.2f s (budget 60 s)\n", in_budget ? "PASS" : "FAIL", seconds);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 && in_budget ? 0 : 1;
}
