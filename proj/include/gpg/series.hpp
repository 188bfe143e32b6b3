#ifndef GPG_SERIES_HPP
#define GPG_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpg/errors.hpp"
#include "gpg/falling_factorial.hpp"
#include "gpg/ring.hpp"

namespace gpg {

/// Power series in t truncated after t^N. Stores ordinary coefficients
/// c_0..c_N; egf(n) gives the factorial-normalized n! c_n.
///
/// Binary operations on series of different order first truncate the
/// longer operand, so the result carries the smaller order. Nothing is ever
/// padded with zeros.
template <RingElement R>
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1, R{Rational(0)}) {}

  Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1)
      throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                  std::to_string(order + 1) + " coefficients");
  }

  static Series one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = R{Rational(1)};
    return s;
  }

  /// The series t (zero when order is 0).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = R{Rational(1)};
    return s;
  }

  static Series constant(std::size_t order, const R& c) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// Builds the series whose egf coefficients are the given values.
  static Series from_egf(std::vector<R> values) {
    if (values.empty()) throw std::invalid_argument("from_egf needs at least one value");
    for (std::size_t n = 0; n < values.size(); ++n)
      values[n] = values[n] * inverse(Rational(factorial(n)));
    const std::size_t order = values.size() - 1;
    return Series(order, std::move(values));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }

  /// n! c_n.
  R egf(std::size_t n) const { return coeffs_.at(n) * Rational(factorial(n)); }

  std::vector<R> egf_all() const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.push_back(egf(n));
    return out;
  }

  Series truncate(std::size_t new_order) const {
    if (new_order > order())
      throw std::invalid_argument("cannot truncate order " + std::to_string(order()) + " up to " +
                                  std::to_string(new_order));
    return Series(new_order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  /// Index of the lowest nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (!is_zero(coeffs_[n])) return n;
    return std::nullopt;
  }

  bool is_zero_series() const { return !valuation().has_value(); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> coeffs_;
};

namespace detail {

template <RingElement R>
std::pair<Series<R>, Series<R>> align(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return {a.order() == n ? a : a.truncate(n), b.order() == n ? b : b.truncate(n)};
}

}  // namespace detail

template <RingElement R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
  auto [x, y] = detail::align(a, b);
  for (std::size_t n = 0; n <= x.order(); ++n) x[n] = x[n] + y[n];
  return x;
}

template <RingElement R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
  auto [x, y] = detail::align(a, b);
  for (std::size_t n = 0; n <= x.order(); ++n) x[n] = x[n] - y[n];
  return x;
}

template <RingElement R>
Series<R> operator-(Series<R> a) {
  for (std::size_t n = 0; n <= a.order(); ++n) a[n] = -a[n];
  return a;
}

template <RingElement R>
Series<R> scale(Series<R> a, const R& c) {
  for (std::size_t n = 0; n <= a.order(); ++n) a[n] = a[n] * c;
  return a;
}

/// Cauchy product truncated at the common order.
template <RingElement R>
Series<R> fps_mul(const Series<R>& a, const Series<R>& b) {
  const auto [x, y] = detail::align(a, b);
  const std::size_t order = x.order();
  Series<R> out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (is_zero(y[j])) continue;
      out[i + j] = out[i + j] + x[i] * y[j];
    }
  }
  return out;
}

template <RingElement R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return fps_mul(a, b);
}

/// num / den; den[0] must be a unit of the coefficient ring.
template <RingElement R>
Series<R> fps_div(const Series<R>& num, const Series<R>& den) {
  const auto [a, b] = detail::align(num, den);
  if (!invertible(b[0]))
    throw NonInvertibleConstantTerm("series division: constant term of the divisor is not invertible");
  const R inv0 = inverse(b[0]);
  Series<R> q(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    R acc = a[n];
    for (std::size_t i = 1; i <= n; ++i)
      if (!is_zero(b[i])) acc = acc - b[i] * q[n - i];
    q[n] = acc * inv0;
  }
  return q;
}

template <RingElement R>
Series<R> fps_pow(const Series<R>& a, int alpha) {
  if (alpha < 1) throw std::invalid_argument("fps_pow: exponent must be >= 1");
  Series<R> result = a;
  Series<R> base = a;
  unsigned rest = static_cast<unsigned>(alpha) - 1;
  while (rest > 0) {
    if (rest & 1u) result = fps_mul(result, base);
    rest >>= 1;
    if (rest > 0) base = fps_mul(base, base);
  }
  return result;
}

/// outer(inner(t)), Horner evaluation; inner must have zero constant term.
template <RingElement R>
Series<R> fps_compose(const Series<R>& outer, const Series<R>& inner) {
  if (!is_zero(inner[0]))
    throw InnerConstantNotZero("fps_compose: inner series has a nonzero constant term");
  const auto [f, g] = detail::align(outer, inner);
  const std::size_t order = f.order();
  Series<R> acc = Series<R>::constant(order, f[order]);
  for (std::size_t n = order; n-- > 0;) {
    acc = fps_mul(acc, g);
    acc[0] = acc[0] + f[n];
  }
  return acc;
}

/// a(t^p): coefficient n moves to slot p*n; slots past the order are dropped.
template <RingElement R>
Series<R> fps_substitute_power(const Series<R>& a, std::size_t p) {
  if (p == 0) throw std::invalid_argument("fps_substitute_power: power must be >= 1");
  Series<R> out(a.order());
  for (std::size_t n = 0; n * p <= a.order(); ++n) out[n * p] = a[n];
  return out;
}

/// a(c t): coefficient n scaled by c^n.
template <RingElement R>
Series<R> fps_dilate(const Series<R>& a, const R& c) {
  Series<R> out = a;
  R power{Rational(1)};
  for (std::size_t n = 0; n <= a.order(); ++n) {
    out[n] = out[n] * power;
    power = power * c;
  }
  return out;
}

/// t^shift a(t), keeping the order.
template <RingElement R>
Series<R> fps_shift_up(const Series<R>& a, std::size_t shift) {
  Series<R> out(a.order());
  for (std::size_t n = 0; n + shift <= a.order(); ++n) out[n + shift] = a[n];
  return out;
}

/// a(t) / t^shift; the first `shift` coefficients must vanish. The result
/// has order N - shift.
template <RingElement R>
Series<R> fps_shift_down(const Series<R>& a, std::size_t shift) {
  if (shift > a.order()) throw std::invalid_argument("fps_shift_down: shift exceeds order");
  for (std::size_t n = 0; n < shift; ++n)
    if (!is_zero(a[n])) throw std::invalid_argument("fps_shift_down: series not divisible by t^shift");
  return Series<R>(a.order() - shift,
                   std::vector<R>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), a.coeffs().end()));
}

/// d/dt; order N becomes N-1 (an order-0 series differentiates to zero).
template <RingElement R>
Series<R> fps_derivative(const Series<R>& a) {
  if (a.order() == 0) return Series<R>(0);
  Series<R> out(a.order() - 1);
  for (std::size_t n = 1; n <= a.order(); ++n) out[n - 1] = a[n] * Rational(n);
  return out;
}

/// Antiderivative with zero constant term; order N becomes N+1.
template <RingElement R>
Series<R> fps_integrate(const Series<R>& a) {
  Series<R> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) out[n + 1] = a[n] * Rational(1, n + 1);
  return out;
}

/// Converts coefficients into another ring (e.g. Rational -> TriPoly).
template <RingElement S, RingElement R>
Series<S> lift(const Series<R>& a) {
  std::vector<S> out;
  out.reserve(a.order() + 1);
  for (const auto& c : a.coeffs()) out.push_back(S(c));
  return Series<S>(a.order(), std::move(out));
}

/// Degenerate exponential e_rho^x(t) = (1 + rho t)^{x/rho}, with egf
/// coefficients (x)_{n,rho}. rho = 0 is the ordinary exponential.
template <RingElement R>
Series<R> deg_exp(const R& xval, const Rational& rho, std::size_t order) {
  Series<R> out(order);
  R ff{Rational(1)};
  Integer fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      ff = ff * (xval - R(rho * Rational(n - 1)));
      fact *= static_cast<unsigned long>(n);
    }
    out[n] = ff * Rational(1, fact);
  }
  return out;
}

/// e^{c t}.
template <RingElement R>
Series<R> exp_series(const R& c, std::size_t order) {
  return deg_exp(c, Rational(0), order);
}

}  // namespace gpg

#endif  // GPG_SERIES_HPP
