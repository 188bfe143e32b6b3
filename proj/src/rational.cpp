#include "gpg/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "gpg/errors.hpp"

namespace gpg {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num_text)) return std::nullopt;
  if (slash != std::string_view::npos && !all_digits(den_text)) return std::nullopt;

  Integer num(std::string(num_text), 10);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = Integer(std::string(den_text), 10);
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw ParseError("not a rational: '" + std::string(text) + "'");
  return *std::move(r);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NotInvertible("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational inverse(const Rational& r) {
  if (r.is_zero()) throw NotInvertible("zero has no inverse");
  return Rational(1) / r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(inverse(base), -exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rat_binomial(const Rational& beta, std::size_t n) {
  Rational acc = 1;
  for (std::size_t i = 0; i < n; ++i) acc *= beta - Rational(i);
  return acc / Rational(factorial(n));
}

}  // namespace gpg
