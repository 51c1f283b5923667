#include "orbitwidth/rational.hpp"

#include <cctype>
#include <ostream>

namespace orbitwidth {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw ZeroDenominator("rational with denominator zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ZeroDenominator("rational with denominator zero");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  // Trim surrounding whitespace.
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw ParseError("empty rational token");

  std::string sign;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') sign = "-";
    s.remove_prefix(1);
    if (s.empty()) throw ParseError("sign without digits");
  }

  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos)
    throw ParseError("token mixes '/' and '.': " + std::string(text));

  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational token: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ZeroDenominator("denominator zero in token: " + std::string(text));
    mpq_class q(mpz_class(sign + std::string(num)), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed decimal token: " + std::string(text));
    if (!ip.empty() && !all_digits(ip))
      throw ParseError("malformed decimal token: " + std::string(text));
    if (!fp.empty() && !all_digits(fp))
      throw ParseError("malformed decimal token: " + std::string(text));
    mpz_class digits(sign + std::string(ip) + std::string(fp), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpq_class q(digits, scale);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (!all_digits(s)) throw ParseError("malformed integer token: " + std::string(text));
  return Rational(mpq_class(mpz_class(sign + std::string(s), 10)));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return abs(b);
  if (b.is_zero()) return abs(a);
  mpz_class cross_a = a.numerator() * b.denominator();
  mpz_class cross_b = b.numerator() * a.denominator();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cross_a.get_mpz_t(), cross_b.get_mpz_t());
  mpq_class q(g, a.denominator() * b.denominator());
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace orbitwidth
