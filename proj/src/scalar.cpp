#include "refdefect/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace refdefect {

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
  // 1/(a+bi) = (a - bi) / (a^2 + b^2)
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::compare(const Scalar& o) const {
  int c = cmp(re_, o.re_);
  if (c != 0) return c;
  return cmp(im_, o.im_);
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("invalid scalar literal: \"" + std::string(text) + "\"");
}

// [+-]? digits ( '/' digits )?
Rational parse_rational_token(std::string_view t, std::string_view whole) {
  if (t.empty()) bad(whole);
  std::string num, den = "1";
  auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    num = std::string(t.substr(0, slash));
    den = std::string(t.substr(slash + 1));
    if (den.find('/') != std::string::npos) bad(whole);
  } else {
    num = std::string(t);
  }
  // Normalizes an optional sign prefix (mpz_set_str rejects '+').
  auto checked = [&](std::string s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      negative = s[0] == '-';
      s.erase(0, 1);
    }
    if (s.empty()) bad(whole);
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole);
    }
    mpz_class z(s, 10);
    if (negative) z = -z;
    return z;
  };
  mpz_class n = checked(num), d = checked(den);
  if (d == 0) throw std::invalid_argument("invalid scalar literal (zero denominator): \"" +
                                          std::string(whole) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// term ending in 'i': "" | "+" | "-" | rational, with an optional '*' before i.
Rational parse_imag_coeff(std::string_view t, std::string_view whole) {
  if (t.empty() || t.back() != 'i') bad(whole);
  t.remove_suffix(1);
  if (!t.empty() && t.back() == '*') t.remove_suffix(1);
  if (t.empty() || t == "+") return Rational(1);
  if (t == "-") return Rational(-1);
  return parse_rational_token(t, whole);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  return parse_rational_token(s, text);
}

Scalar parse_scalar(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) bad(text);
  // There are no exponents in the format, so any '+'/'-' past position 0
  // separates the real term from the imaginary one; a sign directly after
  // '/' or '*' belongs to the token instead.
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (s.back() == 'i') return Scalar(Rational(0), parse_imag_coeff(s, text));
    return Scalar(parse_rational_token(s, text));
  }
  Rational re = parse_rational_token(std::string_view(s).substr(0, split), text);
  Rational im = parse_imag_coeff(std::string_view(s).substr(split), text);
  return Scalar(std::move(re), std::move(im));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  auto imag_str = [](const Rational& im) -> std::string {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  };
  if (s.im() == 0) return s.re().get_str();
  if (s.re() == 0) return imag_str(s.im());
  std::string out = s.re().get_str();
  if (s.im() > 0) out += "+";
  return out + imag_str(s.im());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace refdefect
