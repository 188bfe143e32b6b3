#ifndef GPG_THEOREMS_HPP
#define GPG_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpg/families.hpp"
#include "gpg/rational.hpp"
#include "gpg/report.hpp"
#include "gpg/tripoly.hpp"

namespace gpg {

struct Point {
  Rational x;
  Rational y;
  Rational z;
};

/// Closed form of G_{n+1}/(n+1) for alpha = 1: a five-fold sum of
/// B-coefficients, Hermite-weight factors and the expansion of
/// 1/(lambda b^t - u a^{-t}) in powers of lambda/u, where the inner geometric
/// sum is closed with Eulerian polynomials. Falls back to the u/lambda
/// expansion when u = 0. Requires k >= 1; throws PoleAtOne when lambda = u.
Rational explicit_order1(std::size_t n, const GParams& p, const Rational& x, const Rational& y,
                         const Rational& z);

/// Closed form of G_{n+alpha} / ((n+alpha)(n+alpha-1)...(n+1)) as a sum over
/// compositions k_1 + ... + k_alpha of per-factor B-coefficient/Eulerian
/// products (expansion in powers of u/lambda; lambda/u when lambda = 0).
Rational explicit_higher(std::size_t n, const GParams& p, const Rational& x, const Rational& y,
                         const Rational& z);

/// Right side of the addition formula: value at p1 + p2 as a convolution of
/// values at p1 with degenerate falling factorials of p2.
Rational addition(std::size_t n, const GParams& p, const Point& p1, const Point& p2);

/// Polynomial form, stage 1: the convolution of the numbers (values at the
/// origin) with products of degenerate falling factorials in x, y, z.
TriPoly poly_expand_stage1(std::size_t n, const GParams& p);

/// Polynomial form, stage 2: stage 1 with every falling factorial expanded
/// through w~_rho rows and regrouped by monomial x^{p-q-l} y^l z^q.
TriPoly poly_expand(std::size_t n, const GParams& p);

/// Literal readings of the published closed forms, kept to measure how far
/// they are from the generating function. Not used for certification.
namespace literal {
Rational explicit_order1(std::size_t n, const GParams& p, const Rational& x, const Rational& y,
                         const Rational& z);
Rational explicit_higher(std::size_t n, const GParams& p, const Rational& x, const Rational& y,
                         const Rational& z);
}  // namespace literal

const std::vector<std::string>& suite_names();

/// Runs a named certification suite. Deterministic in (name, n_max, trials,
/// seed). Throws UnknownSuite.
VerifyReport run_suite(std::string_view name, std::size_t n_max, int trials, std::uint64_t seed);

}  // namespace gpg

#endif  // GPG_THEOREMS_HPP
