#ifndef GPG_TRIPOLY_HPP
#define GPG_TRIPOLY_HPP

#include <array>
#include <concepts>
#include <map>
#include <string>

#include "gpg/rational.hpp"

namespace gpg {

/// Exponent triple (i, j, l) of the monomial x^i y^j z^l.
using Exponent = std::array<unsigned, 3>;

enum class Var { x = 0, y = 1, z = 2 };

/// Sparse polynomial in x, y, z over the rationals. No stored coefficient
/// is ever zero, so structural equality is polynomial equality.
class TriPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  TriPoly() = default;
  TriPoly(const Rational& constant);  // NOLINT
  template <std::integral I>
  TriPoly(I constant) : TriPoly(Rational(constant)) {}  // NOLINT

  static TriPoly monomial(const Exponent& e, const Rational& coeff);
  static TriPoly variable(Var v);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Exponent& e) const;
  Rational constant_term() const { return coeff({0, 0, 0}); }
  unsigned total_degree() const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const TriPoly& o);
  TriPoly& operator*=(const Rational& c);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const Rational& c) { return a *= c; }
  friend TriPoly operator*(const Rational& c, TriPoly a) { return a *= c; }
  friend TriPoly operator-(const TriPoly& a);

  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  std::string str() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  TermMap terms_;
};

Rational tripoly_eval(const TriPoly& p, const Rational& x, const Rational& y, const Rational& z);
TriPoly tripoly_derivative(const TriPoly& p, Var v);

inline bool is_zero(const TriPoly& p) { return p.is_zero(); }
/// Only nonzero constants are units in Q[x, y, z].
inline bool invertible(const TriPoly& p) { return p.is_constant() && !p.is_zero(); }
TriPoly inverse(const TriPoly& p);

}  // namespace gpg

#endif  // GPG_TRIPOLY_HPP
