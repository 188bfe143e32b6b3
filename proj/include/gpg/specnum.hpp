#ifndef GPG_SPECNUM_HPP
#define GPG_SPECNUM_HPP

#include <cstddef>
#include <vector>

#include "gpg/falling_factorial.hpp"
#include "gpg/rational.hpp"
#include "gpg/series.hpp"

namespace gpg {

/// Degenerate logarithm log_rho(1 + t) = ((1 + t)^rho - 1) / rho, the
/// compositional inverse of e_rho(t) - 1. rho = 0 gives log(1 + t).
Series<Rational> deg_log(const Rational& rho, std::size_t order);

/// (1 + t)^beta.
Series<Rational> binomial_series(const Rational& beta, std::size_t order);

/// Modified degenerate polyexponential Ei_{k,rho}(t): coefficient of t^n is
/// (1)_{n,rho} / (n^k (n-1)!) for n >= 1. Negative k multiplies by n^{|k|}.
Series<Rational> polyexp(int k, const Rational& rho, std::size_t order);

/// Li_k(t) = sum_{n>=1} t^n / n^k.
Series<Rational> polylog(int k, std::size_t order);

enum class StirlingKind { first = 1, second = 2 };

/// Degenerate Stirling numbers, read off (log_rho(1+t))^j / j! (first kind)
/// or (e_rho(t) - 1)^j / j! (second kind). Throws IndexOutOfRange if j > n.
Rational deg_stirling(StirlingKind kind, std::size_t n, std::size_t j, const Rational& rho);

/// Triangle S(0..n_max, 0..n_max) of degenerate Stirling numbers built from
/// the triangular recurrences (independent of the series route).
std::vector<std::vector<Rational>> deg_stirling_triangle(StirlingKind kind, std::size_t n_max,
                                                         const Rational& rho);

/// Eulerian numbers A(n, k), rows 0..n_max, with A(0,0) = 1 and
/// A(n,k) = (n-k+1) A(n-1,k-1) + k A(n-1,k). Under this base A_m(z) / (1-z)^{m+1}
/// expands to sum_n n^m z^n.
struct EulerianTable {
  std::vector<std::vector<Integer>> rows;

  std::size_t n_max() const { return rows.size() - 1; }
  Integer at(std::size_t n, std::size_t k) const {
    return k < rows.at(n).size() ? rows[n][k] : Integer(0);
  }
};

EulerianTable eulerian_table(std::size_t n_max);

/// A_m(z) = sum_k A(m, k) z^k.
Rational eulerian_poly(std::size_t m, const Rational& z);
Rational eulerian_poly(const EulerianTable& table, std::size_t m, const Rational& z);

/// A_m(z) / (1 - z)^{m+1}, the closed form of sum_{n>=0} n^m z^n (0^0 = 1).
/// Throws PoleAtOne at z = 1.
Rational geom_power_sum(const Rational& z, std::size_t m);
Rational geom_power_sum(const EulerianTable& table, const Rational& z, std::size_t m);

/// Degenerate Bernoulli polynomial of the second kind b_{n,rho}(x), the egf
/// coefficients of t (1+t)^x / log_rho(1+t).
Rational deg_bernoulli2(std::size_t n, const Rational& rho, const Rational& xval);
std::vector<Rational> deg_bernoulli2_row(std::size_t n_max, const Rational& rho, const Rational& xval);

/// Row of r-Whitney numbers of the first kind: m^n (x)_n = sum_j w(n,j) (m x + r)^j.
struct WhitneyRow {
  Rational m;
  Rational r;
  std::size_t n = 0;
  std::vector<Rational> coeffs;  // j = 0..n
};

/// Throws DegenerateBasis for m = 0.
WhitneyRow whitney_first(const Rational& m, const Rational& r, std::size_t n);

/// w~_m(n, j) with (x)_{n,m} = sum_j w~_m(n,j) x^j, by direct expansion.
std::vector<Rational> whitney_tilde(const Rational& m, std::size_t n);

/// B-coefficients of Ei_{k,rho}(log_rho(1 + (1-u) L t)) = t sum_m B(m) t^m / m!.
/// k = 1 gives B(0) = (1-u) L and B(m) = 0 otherwise.
Rational bcoef(int k, std::size_t m, const Rational& u, const Rational& log_ab, const Rational& rho);
std::vector<Rational> bcoef_row(int k, std::size_t m_max, const Rational& u, const Rational& log_ab,
                                const Rational& rho);

}  // namespace gpg

#endif  // GPG_SPECNUM_HPP
