#include "leviform/gauss_rational.hpp"

#include <cctype>
#include <ostream>

#include "leviform/errors.hpp"

namespace leviform {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCategory::ParseError: return "PARSE_ERROR";
    case ErrorCategory::NotRealValued: return "NOT_REAL_VALUED";
    case ErrorCategory::NotInMaximalIdeal: return "NOT_IN_MAXIMAL_IDEAL";
    case ErrorCategory::ZeroInput: return "ZERO_INPUT";
    case ErrorCategory::NonIsolated: return "NON_ISOLATED";
    case ErrorCategory::NotQuasihomogeneous: return "NOT_QUASIHOMOGENEOUS";
    case ErrorCategory::NotSemiquasihomogeneous: return "NOT_SEMIQUASIHOMOGENEOUS";
    case ErrorCategory::PrincipalPart: return "PRINCIPAL_PART";
    case ErrorCategory::NotLeviFlat: return "NOT_LEVI_FLAT";
    case ErrorCategory::ResourceLimit: return "RESOURCE_LIMIT";
  }
  return "UNKNOWN";
}

ParseError::ParseError(const std::string& message, int line, int column)
    : DomainError(ErrorCategory::ParseError,
                  std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "division by zero");
  mpq_class n = norm2();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw DomainError(ErrorCategory::InvalidArgument, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(std::string_view text) {
  auto bad = [&] {
    return DomainError(ErrorCategory::InvalidArgument,
                       "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) throw bad();
    for (std::size_t k = start; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) throw bad();
  };
  std::string cleaned(text);
  if (!cleaned.empty() && cleaned[0] == '+') cleaned.erase(0, 1);
  if (slash == std::string_view::npos) {
    check_int(text, true);
    return mpq_class(mpz_class(cleaned));
  }
  check_int(text.substr(0, slash), true);
  check_int(text.substr(slash + 1), false);
  mpz_class den(std::string(text.substr(slash + 1)));
  if (den == 0) throw bad();
  mpq_class q(cleaned);
  q.canonicalize();
  return q;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return rational_to_string(re_) + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& q) { return os << q.to_string(); }

}  // namespace leviform
