#include "gpg/tripoly.hpp"

#include <sstream>
#include <vector>

#include "gpg/errors.hpp"

namespace gpg {

TriPoly::TriPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponent{0, 0, 0}, constant);
}

TriPoly TriPoly::monomial(const Exponent& e, const Rational& coeff) {
  TriPoly p;
  p.add_term(e, coeff);
  return p;
}

TriPoly TriPoly::variable(Var v) {
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(e, 1);
}

bool TriPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

Rational TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

unsigned TriPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

void TriPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) { return *this = *this * o; }

TriPoly& TriPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TriPoly operator-(const TriPoly& a) {
  TriPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string TriPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static constexpr const char* names[] = {"x", "y", "z"};
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      os << '*' << names[v];
      if (e[v] > 1) os << '^' << e[v];
    }
  }
  return os.str();
}

Rational tripoly_eval(const TriPoly& p, const Rational& x, const Rational& y, const Rational& z) {
  const unsigned deg = p.total_degree();
  std::array<std::vector<Rational>, 3> powers;
  const std::array<Rational, 3> point{x, y, z};
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].reserve(deg + 1);
    powers[v].push_back(1);
    for (unsigned d = 1; d <= deg; ++d) powers[v].push_back(powers[v].back() * point[v]);
  }
  Rational acc;
  for (const auto& [e, c] : p.terms())
    acc += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
  return acc;
}

TriPoly tripoly_derivative(const TriPoly& p, Var v) {
  const auto idx = static_cast<std::size_t>(v);
  TriPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e[idx] == 0) continue;
    Exponent d = e;
    --d[idx];
    r += TriPoly::monomial(d, c * Rational(e[idx]));
  }
  return r;
}

TriPoly inverse(const TriPoly& p) {
  if (!invertible(p)) throw NotInvertible("polynomial is not a nonzero constant: " + p.str());
  return TriPoly(inverse(p.constant_term()));
}

}  // namespace gpg
