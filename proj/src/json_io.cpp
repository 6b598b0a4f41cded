#include "leviform/json_io.hpp"

#include <algorithm>

#include "leviform/errors.hpp"
#include "leviform/format.hpp"

namespace leviform {

using nlohmann::json;

namespace {

DomainError malformed(const std::string& what) {
  return DomainError(ErrorCategory::InvalidArgument, "malformed JSON: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::size_t read_count(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw malformed(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

GaussRational read_coefficient(const json& t) {
  const json& re = field(t, "re");
  const json& im = field(t, "im");
  if (!re.is_string() || !im.is_string()) throw malformed("coefficients must be \"p/q\" strings");
  return {rational_from_string(re.get<std::string>()), rational_from_string(im.get<std::string>())};
}

void write_coefficient(json& t, const GaussRational& c) {
  t["re"] = rational_to_string(c.re());
  t["im"] = rational_to_string(c.im());
}

}  // namespace

json to_json(const ExponentVector& e) { return json(std::vector<std::uint32_t>(e.values().begin(), e.values().end())); }

ExponentVector exponent_from_json(const json& j) {
  if (!j.is_array()) throw malformed("exponent vector must be an array");
  std::vector<std::uint32_t> v;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw malformed("exponents must be nonnegative integers");
    v.push_back(x.get<std::uint32_t>());
  }
  return ExponentVector(std::move(v));
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : display_terms(p)) {
    json t;
    t["exps"] = to_json(e);
    write_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
  std::size_t n = read_count(j, "nvars");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw malformed("\"terms\" must be an array");
  Poly out(n);
  for (const auto& t : terms) {
    ExponentVector e = exponent_from_json(field(t, "exps"));
    if (e.size() != n) throw malformed("exponent length does not match nvars");
    out += Poly::monomial(e, read_coefficient(t));
  }
  return out;
}

json to_json(const BiPoly& p) {
  json j = to_json(p.poly());
  j["split"] = p.n();
  return j;
}

BiPoly bipoly_from_json(const json& j) { return BiPoly(read_count(j, "split"), poly_from_json(j)); }

json to_json(const HermitianPoly& f) {
  std::vector<std::pair<HermitianPoly::Key, GaussRational>> entries(f.table().begin(), f.table().end());
  std::size_t n = f.nvars();
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    return display_before(l.first.first.concat(l.first.second), r.first.first.concat(r.first.second));
  });
  json terms = json::array();
  for (const auto& [key, c] : entries) {
    json t;
    t["mu"] = to_json(key.first);
    t["nu"] = to_json(key.second);
    write_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  return {{"nvars", n}, {"terms", std::move(terms)}};
}

HermitianPoly hermitian_from_json(const json& j) {
  std::size_t n = read_count(j, "nvars");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw malformed("\"terms\" must be an array");
  HermitianPoly::Table table;
  for (const auto& t : terms) {
    HermitianPoly::Key key{exponent_from_json(field(t, "mu")), exponent_from_json(field(t, "nu"))};
    auto [it, inserted] = table.try_emplace(std::move(key), read_coefficient(t));
    if (!inserted) throw malformed("duplicate (mu, nu) entry");
  }
  return HermitianPoly(n, std::move(table));
}

}  // namespace leviform
