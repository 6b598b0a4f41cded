#include "leviform/format.hpp"

#include <algorithm>

namespace leviform {

bool display_before(const ExponentVector& a, const ExponentVector& b) {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<std::pair<ExponentVector, GaussRational>> display_terms(const Poly& p) {
  std::vector<std::pair<ExponentVector, GaussRational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return display_before(l.first, r.first); });
  return out;
}

std::vector<std::string> holomorphic_names(std::size_t n) {
  if (n == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

std::string monomial_to_string(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Appends one signed term to `out`; the first term carries no leading '+'.
void append_term(std::string& out, const GaussRational& c, const std::string& monomial) {
  bool unit_monomial = monomial == "1";
  bool negative = false;
  std::string coeff;
  if (c.is_real() || sgn(c.re()) == 0) {
    // Single-part coefficient: sign can be pulled out front.
    const mpq_class& part = c.is_real() ? c.re() : c.im();
    mpq_class mag = abs(part);
    negative = sgn(part) < 0;
    if (c.is_real()) {
      coeff = (mag == 1 && !unit_monomial) ? "" : rational_to_string(mag);
    } else {
      coeff = mag == 1 ? "i" : rational_to_string(mag) + "*i";
    }
  } else {
    coeff = "(" + c.to_string() + ")";
  }
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += coeff;
  if (!unit_monomial) {
    if (!coeff.empty()) out += "*";
    out += monomial;
  }
}

}  // namespace

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : display_terms(p)) append_term(out, c, monomial_to_string(e, names));
  return out;
}

std::string to_string(const Poly& p) { return to_string(p, holomorphic_names(p.nvars())); }

std::string to_string(const BiPoly& p) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= p.n(); ++j) names.push_back("z" + std::to_string(j));
  for (std::size_t j = 1; j <= p.n(); ++j) names.push_back("w" + std::to_string(j));
  return to_string(p.poly(), names);
}

std::string to_string(const HermitianPoly& f) {
  std::vector<std::string> names = holomorphic_names(f.nvars());
  for (std::size_t j = 0; j < f.nvars(); ++j) names.push_back("conj(" + names[j] + ")");
  return to_string(f.as_split_poly(), names);
}

}  // namespace leviform
