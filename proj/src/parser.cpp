#include "leviform/parser.hpp"

#include <cctype>
#include <string>

#include "leviform/errors.hpp"

namespace leviform {
namespace {

constexpr std::uint32_t kMaxExponent = 4096;

struct Token {
  enum class Kind { Integer, Identifier, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++k;
  };
  while (k < src.size()) {
    char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    int tl = line;
    int tc = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        digits += src[k];
        advance();
      }
      if (k < src.size() && (src[k] == '.' || src[k] == 'e' || src[k] == 'E'))
        throw ParseError("floating-point literals are not allowed", line, column);
      out.push_back({Token::Kind::Integer, digits, tl, tc});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        ident += src[k];
        advance();
      }
      out.push_back({Token::Kind::Identifier, ident, tl, tc});
      continue;
    }
    if (c == '.') throw ParseError("floating-point literals are not allowed", tl, tc);
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), tl, tc});
      advance();
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t nvars) : tokens_(tokenize(src)), nvars_(nvars) {}

  ExprAst parse() {
    ExprAst e = expr();
    const Token& t = peek();
    if (t.kind != Token::Kind::End) throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_symbol(char s) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == s; }

  static ExprAst node(ExprNode::Kind kind, const Token& at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  static ExprAst binary(ExprNode::Kind kind, const Token& at, ExprAst lhs, ExprAst rhs) {
    ExprAst n = node(kind, at);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (at_symbol('+') || at_symbol('-')) {
      const Token& op = take();
      lhs = binary(op.text[0] == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op, std::move(lhs), term());
    }
    return lhs;
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.kind == Token::Kind::Integer || t.kind == Token::Kind::Identifier || at_symbol('(');
  }

  ExprAst term() {
    ExprAst lhs = unary();
    while (true) {
      if (at_symbol('*') || at_symbol('/')) {
        const Token& op = take();
        lhs = binary(op.text[0] == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div, op, std::move(lhs), unary());
      } else if (starts_primary()) {
        const Token& at = peek();
        lhs = binary(ExprNode::Kind::Mul, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  ExprAst unary() {
    if (at_symbol('-')) {
      const Token& op = take();
      ExprAst n = node(ExprNode::Kind::Neg, op);
      n->children.push_back(unary());
      return n;
    }
    if (at_symbol('+')) {
      take();
      return unary();
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (!at_symbol('^')) return base;
    const Token& op = take();
    const Token& ex = peek();
    if (ex.kind != Token::Kind::Integer)
      throw ParseError("exponent must be a nonnegative integer literal", ex.line, ex.column);
    take();
    if (ex.text.size() > 9 || std::stoul(ex.text) > kMaxExponent)
      throw ParseError("exponent too large", ex.line, ex.column);
    ExprAst n = node(ExprNode::Kind::Pow, op);
    n->exponent = static_cast<std::uint32_t>(std::stoul(ex.text));
    n->children.push_back(std::move(base));
    return n;
  }

  ExprAst call(ExprNode::Kind kind, const Token& name) {
    if (!at_symbol('(')) throw ParseError("expected '(' after " + name.text, peek().line, peek().column);
    take();
    bool real_part = kind == ExprNode::Kind::Re || kind == ExprNode::Kind::Im;
    if (real_part && re_im_depth_ > 0)
      throw ParseError(name.text + "(...) may not be nested inside Re/Im", name.line, name.column);
    if (real_part) ++re_im_depth_;
    ExprAst n = node(kind, name);
    n->children.push_back(expr());
    if (real_part) --re_im_depth_;
    if (!at_symbol(')')) throw ParseError("expected ')'", peek().line, peek().column);
    take();
    return n;
  }

  ExprAst primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Integer) {
      take();
      ExprAst n = node(ExprNode::Kind::Literal, t);
      n->literal = mpq_class(mpz_class(t.text));
      return n;
    }
    if (t.kind == Token::Kind::Identifier) {
      take();
      if (t.text == "conj") return call(ExprNode::Kind::Conj, t);
      if (t.text == "Re") return call(ExprNode::Kind::Re, t);
      if (t.text == "Im") return call(ExprNode::Kind::Im, t);
      if (t.text == "i") return node(ExprNode::Kind::ImaginaryUnit, t);
      ExprAst n = node(ExprNode::Kind::Variable, t);
      n->variable = resolve_variable(t);
      return n;
    }
    if (at_symbol('(')) {
      take();
      ExprAst inner = expr();
      if (!at_symbol(')')) throw ParseError("expected ')'", peek().line, peek().column);
      take();
      return inner;
    }
    if (t.kind == Token::Kind::End) throw ParseError("unexpected end of input", t.line, t.column);
    throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
  }

  std::size_t resolve_variable(const Token& t) const {
    if (nvars_ == 2 && t.text == "x") return 0;
    if (nvars_ == 2 && t.text == "y") return 1;
    if (t.text.size() >= 2 && t.text[0] == 'z') {
      std::string digits = t.text.substr(1);
      bool numeric = digits.size() <= 6 && digits[0] != '0' &&
                     digits.find_first_not_of("0123456789") == std::string::npos;
      if (numeric) {
        std::size_t k = std::stoul(digits);
        if (k >= 1 && k <= nvars_) return k - 1;
        throw ParseError("variable " + t.text + " out of range for n = " + std::to_string(nvars_), t.line, t.column);
      }
    }
    throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  int re_im_depth_ = 0;
};

// Evaluates into a polynomial in 2n variables: z_1..z_n then conj(z_1)..conj(z_n).
class Evaluator {
 public:
  Evaluator(std::size_t n, bool holomorphic) : n_(n), holomorphic_(holomorphic) {}

  Poly eval(const ExprNode& e) const {
    using K = ExprNode::Kind;
    switch (e.kind) {
      case K::Literal: return Poly::constant(2 * n_, GaussRational(e.literal));
      case K::ImaginaryUnit: return Poly::constant(2 * n_, GaussRational::imaginary_unit());
      case K::Variable: return Poly::variable(2 * n_, e.variable);
      case K::Neg: return -eval(*e.children[0]);
      case K::Add: return eval(*e.children[0]) + eval(*e.children[1]);
      case K::Sub: return eval(*e.children[0]) - eval(*e.children[1]);
      case K::Mul: return eval(*e.children[0]) * eval(*e.children[1]);
      case K::Div: {
        Poly den = eval(*e.children[1]);
        if (!den.is_constant() || den.is_zero())
          throw ParseError("division is only allowed by a nonzero constant", e.line, e.column);
        return den.constant_term().inverse() * eval(*e.children[0]);
      }
      case K::Pow: return pow(eval(*e.children[0]), e.exponent);
      case K::Conj:
        reject_in_holomorphic(e, "use of conjugate variable");
        return conj_swap(eval(*e.children[0]));
      case K::Re: {
        reject_in_holomorphic(e, "Re(...) is not allowed in a holomorphic expression");
        Poly v = eval(*e.children[0]);
        return GaussRational(mpq_class(1, 2)) * (v + conj_swap(v));
      }
      case K::Im: {
        reject_in_holomorphic(e, "Im(...) is not allowed in a holomorphic expression");
        Poly v = eval(*e.children[0]);
        // (v - conj v) / (2i) = -i/2 * (v - conj v)
        return GaussRational(mpq_class(0), mpq_class(-1, 2)) * (v - conj_swap(v));
      }
    }
    return Poly(2 * n_);
  }

 private:
  void reject_in_holomorphic(const ExprNode& e, const char* message) const {
    if (holomorphic_) throw ParseError(message, e.line, e.column);
  }

  // Complex conjugate of the function: conjugate coefficients and swap z with conj(z).
  Poly conj_swap(const Poly& p) const {
    Poly::TermMap out;
    for (const auto& [e, c] : p.terms()) out.emplace(e.slice(n_, n_).concat(e.slice(0, n_)), c.conj());
    return Poly(2 * n_, std::move(out));
  }

  std::size_t n_;
  bool holomorphic_;
};

}  // namespace

ExprAst parse_expression(std::string_view src, std::size_t nvars) {
  if (nvars == 0) throw DomainError(ErrorCategory::InvalidArgument, "variable count must be positive");
  return Parser(src, nvars).parse();
}

Poly parse_holomorphic(std::string_view src, std::size_t nvars) {
  ExprAst ast = parse_expression(src, nvars);
  Poly split = Evaluator(nvars, true).eval(*ast);
  Poly::TermMap terms;
  for (const auto& [e, c] : split.terms()) terms.emplace(e.slice(0, nvars), c);
  return Poly(nvars, std::move(terms));
}

HermitianPoly parse_real_analytic(std::string_view src, std::size_t nvars) {
  ExprAst ast = parse_expression(src, nvars);
  Poly split = Evaluator(nvars, false).eval(*ast);
  if (!satisfies_reality(nvars, split))
    throw DomainError(ErrorCategory::NotRealValued, "expression is not real-valued (conj(F_mu,nu) != F_nu,mu)");
  return HermitianPoly::from_split_poly(nvars, split);
}

}  // namespace leviform
