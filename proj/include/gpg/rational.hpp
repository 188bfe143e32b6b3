#ifndef GPG_RATIONAL_HPP
#define GPG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace gpg {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
///
/// Thin value wrapper over mpq_class. Every constructor canonicalizes, and
/// GMP arithmetic keeps results canonical, so two equal values always have
/// identical numerator/denominator pairs.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value)  // NOLINT
      : value_(std::signed_integral<I> ? mpq_class(static_cast<long>(value))
                                       : mpq_class(static_cast<unsigned long>(value))) {}

  Rational(const Integer& value) : value_(value) {}  // NOLINT

  /// Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  explicit Rational(mpq_class value);

  /// Text form: optional sign, decimal integer, optional "/" positive
  /// integer. Throws ParseError on anything else.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power; negative exponents invert (throws NotInvertible on 0).
/// 0^0 = 1.
Rational pow(const Rational& base, long exponent);

Integer factorial(std::size_t n);
Integer binomial(std::size_t n, std::size_t k);

/// beta (beta-1) ... (beta-n+1) / n!, with rat_binomial(beta, 0) = 1.
Rational rat_binomial(const Rational& beta, std::size_t n);

// Ring contract hooks for Rational.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool invertible(const Rational& r) { return !r.is_zero(); }
Rational inverse(const Rational& r);

}  // namespace gpg

#endif  // GPG_RATIONAL_HPP
