#include "leviform/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leviform/errors.hpp"
#include "leviform/format.hpp"
#include "leviform/json_io.hpp"
#include "leviform/levi.hpp"
#include "leviform/normal_form.hpp"
#include "leviform/parser.hpp"
#include "leviform/quasihomogeneous.hpp"
#include "leviform/standard_basis.hpp"

namespace leviform {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t nvars = 0;
  std::string expression;
  std::string file;
  bool json = false;
  std::uint64_t degree_cap = 0;  // 0: not given on the command line
  std::uint64_t jet_order = 0;
  std::string mode = "auto";
};

std::string read_input(const Config& cfg) {
  bool has_expr = !cfg.expression.empty();
  bool has_file = !cfg.file.empty();
  if (has_expr == has_file) throw UsageError("give exactly one of an expression argument or --file");
  if (has_expr) return cfg.expression;
  std::ifstream in(cfg.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + cfg.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StandardBasisOptions basis_options(const Config& cfg) {
  StandardBasisOptions opts;
  if (cfg.degree_cap != 0) {
    opts.degree_cap = cfg.degree_cap;
  } else if (const char* env = std::getenv("LEVIFORM_DEGREE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0 || env[0] == '-') throw UsageError("LEVIFORM_DEGREE_CAP must be a positive integer");
    opts.degree_cap = v;
  }
  return opts;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string weights_text(const WeightSystem& w) {
  std::vector<std::string> parts;
  for (const auto& a : w.alpha) parts.push_back(rational_to_string(a));
  return "(" + join(parts, ", ") + ")";
}

std::string form_index_text(const ExteriorForm::Index& index, std::size_t n) {
  std::vector<std::string> parts;
  for (auto k : index) parts.push_back(k < n ? "dz" + std::to_string(k + 1) : "dw" + std::to_string(k - n + 1));
  return join(parts, "^");
}

json certificate_json(const LeviCertificate& cert, std::size_t n) {
  json j = {{"verdict", verdict_name(cert.verdict)}};
  if (cert.witness)
    j["witness"] = {{"index", form_index_text(cert.witness->index, n)},
                    {"coefficient", to_json(BiPoly(n, cert.witness->coefficient))}};
  return j;
}

void print_certificate(std::ostream& out, const LeviCertificate& cert, std::size_t n) {
  out << verdict_name(cert.verdict) << '\n';
  if (cert.witness)
    out << "witness " << form_index_text(cert.witness->index, n) << ": "
        << to_string(BiPoly(n, cert.witness->coefficient)) << '\n';
}

void print_template(std::ostream& out, const std::string& label, const NormalFormTemplate& t) {
  out << label << to_string(t) << '\n';
  out << "  mu = " << t.mu << ", degree bound = " << t.degree_bound;
  if (t.weights) out << ", weights = " << weights_text(*t.weights);
  if (t.heuristic) out << ", HEURISTIC";
  out << '\n';
}

void cmd_milnor(const Config& cfg, std::ostream& out) {
  Poly f = parse_holomorphic(read_input(cfg), cfg.nvars);
  MilnorNumber mu = milnor_number(f, basis_options(cfg));
  if (mu.infinite) throw DomainError(ErrorCategory::NonIsolated, "singularity at 0 is not isolated");
  if (cfg.json) out << json{{"mu", mu.value}}.dump() << '\n';
  else out << mu.value << '\n';
}

void cmd_basis(const Config& cfg, std::ostream& out) {
  Poly f = parse_holomorphic(read_input(cfg), cfg.nvars);
  LocalAlgebraBasis basis = local_algebra_basis(f, basis_options(cfg));
  if (cfg.json) {
    json ms = json::array();
    for (const auto& m : basis.monomials) ms.push_back(to_json(m));
    out << json{{"mu", basis.mu()}, {"monomials", ms}}.dump() << '\n';
    return;
  }
  auto names = holomorphic_names(cfg.nvars);
  std::vector<std::string> parts;
  for (const auto& m : basis.monomials) parts.push_back(monomial_to_string(m, names));
  out << join(parts, ", ") << '\n';
}

void cmd_weights(const Config& cfg, std::ostream& out) {
  Poly f = parse_holomorphic(read_input(cfg), cfg.nvars);
  if (f.is_zero()) throw DomainError(ErrorCategory::ZeroInput, "the zero polynomial has no weights");
  auto w = find_weights(newton_support(f));
  if (!w) throw DomainError(ErrorCategory::NotQuasihomogeneous, "no positive weights put the support on one diagonal");
  if (cfg.json) out << json{{"weights", to_json(*w)}, {"ambiguous", w->ambiguous}}.dump() << '\n';
  else out << weights_text(*w) << (w->ambiguous ? " ambiguous" : "") << '\n';
}

void cmd_split(const Config& cfg, std::ostream& out) {
  Poly f = parse_holomorphic(read_input(cfg), cfg.nvars);
  SemiQhDecomposition s = semiqh_split(f, basis_options(cfg));
  if (cfg.json) {
    out << json{{"Q", to_json(s.q)}, {"Fprime", to_json(s.fprime)}, {"weights", to_json(s.weights)}}.dump() << '\n';
    return;
  }
  auto names = holomorphic_names(cfg.nvars);
  out << "Q = " << to_string(s.q, names) << '\n'
      << "F' = " << to_string(s.fprime, names) << '\n'
      << "weights = " << weights_text(s.weights) << '\n';
}

void cmd_jet(const Config& cfg, std::ostream& out) {
  Poly f = parse_holomorphic(read_input(cfg), cfg.nvars);
  Poly j = jet(f, cfg.jet_order);
  if (cfg.json) out << to_json(j).dump() << '\n';
  else out << to_string(j, holomorphic_names(cfg.nvars)) << '\n';
}

void cmd_complexify(const Config& cfg, std::ostream& out) {
  BiPoly fc = complexify(parse_real_analytic(read_input(cfg), cfg.nvars));
  if (cfg.json) out << to_json(fc).dump() << '\n';
  else out << to_string(fc) << '\n';
}

void cmd_levicheck(const Config& cfg, std::ostream& out) {
  LeviCertificate cert = is_levi_flat(parse_real_analytic(read_input(cfg), cfg.nvars));
  if (cfg.json) out << certificate_json(cert, cfg.nvars).dump() << '\n';
  else print_certificate(out, cert, cfg.nvars);
}

void cmd_singcheck(const Config& cfg, std::ostream& out) {
  bool origin = singular_locus_is_origin(parse_real_analytic(read_input(cfg), cfg.nvars), basis_options(cfg));
  if (cfg.json) out << json{{"singular_locus_is_origin", origin}}.dump() << '\n';
  else out << (origin ? "true" : "false") << '\n';
}

void cmd_normalform(const Config& cfg, std::ostream& out) {
  HermitianPoly F = parse_real_analytic(read_input(cfg), cfg.nvars);
  StandardBasisOptions opts = basis_options(cfg);

  std::optional<Theorem1Result> homogeneous;
  if (cfg.mode != "quasihomogeneous") {
    try {
      homogeneous = theorem1_template(F, opts);
    } catch (const DomainError& e) {
      bool retry = cfg.mode == "auto" &&
                   (e.category() == ErrorCategory::PrincipalPart || e.category() == ErrorCategory::NonIsolated);
      if (!retry) throw;
    }
  }

  if (homogeneous) {
    if (cfg.json) {
      out << json{{"template", to_json(homogeneous->coarse)},
                  {"refined", to_json(homogeneous->refined)},
                  {"levi", certificate_json(homogeneous->certificate, cfg.nvars)}}
                 .dump()
          << '\n';
      return;
    }
    print_template(out, "coarse:  ", homogeneous->coarse);
    print_template(out, "refined: ", homogeneous->refined);
    out << "levi: " << verdict_name(homogeneous->certificate.verdict) << '\n';
    return;
  }

  NormalFormTemplate t = theorem2_template(F, opts);
  if (cfg.json) {
    out << json{{"template", to_json(t)}, {"refined", nullptr}, {"levi", json{{"verdict", "FLAT"}}}}.dump() << '\n';
    return;
  }
  print_template(out, "template: ", t);
  out << "levi: FLAT\n";
}

void cmd_arnold(const Config& cfg, std::ostream& out) {
  Poly q = parse_holomorphic(read_input(cfg), cfg.nvars);
  NormalFormTemplate t = arnold_template(q, basis_options(cfg));
  if (cfg.json) out << to_json(t).dump() << '\n';
  else out << to_string(t) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Levi-flatness certificates and singularity invariants for polynomial hypersurfaces", "leviform"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Config cfg;
  std::function<void(const Config&, std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& description, auto handler, bool real_input) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("-n,--nvars", cfg.nvars, "Number of complex variables n")->required()->check(CLI::PositiveNumber);
    sub->add_option("expression", cfg.expression,
                    real_input ? "Real-valued expression in z and conj(z)" : "Holomorphic polynomial");
    sub->add_option("--file", cfg.file, "Read the expression from a file");
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_option("--degree-cap", cfg.degree_cap, "Standard-basis degree cap (default 64)")
        ->check(CLI::PositiveNumber);
    sub->callback([&action, handler] { action = handler; });
    return sub;
  };

  add("milnor", "Milnor number of an isolated singularity at 0", cmd_milnor, false);
  add("basis", "Monomial basis of the local algebra", cmd_basis, false);
  add("weights", "Quasihomogeneous weights of the Newton support", cmd_weights, false);
  add("split", "Semiquasihomogeneous decomposition f = Q + F'", cmd_split, false);
  add("jet", "k-jet of a polynomial", cmd_jet, false)
      ->add_option("-k,--order", cfg.jet_order, "Jet order k")
      ->required();
  add("complexify", "Complexification F_C(z, w)", cmd_complexify, true);
  add("levicheck", "Levi-flatness certificate", cmd_levicheck, true);
  add("singcheck", "Is the singular locus of M_C at most the origin", cmd_singcheck, true);
  add("normalform", "Normal-form templates for a Levi-flat hypersurface", cmd_normalform, true)
      ->add_option("--mode", cfg.mode, "auto, homogeneous or quasihomogeneous")
      ->check(CLI::IsMember({"auto", "homogeneous", "quasihomogeneous"}));
  add("arnold", "Arnold normal-form template of a quasihomogeneous polynomial", cmd_arnold, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    action(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << category_name(e.category()) << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace leviform
