#ifndef GPG_FAMILIES_HPP
#define GPG_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpg/rational.hpp"
#include "gpg/report.hpp"
#include "gpg/series.hpp"
#include "gpg/specnum.hpp"
#include "gpg/tripoly.hpp"

namespace gpg {

/// Parameters of the degenerate three-variable Hermite-based
/// Apostol-Frobenius-type poly-Genocchi family. The bases a, b enter only
/// through their logarithms, so a = e^{log_a}, b = e^{log_b}.
struct GParams {
  int k = 1;
  int alpha = 1;
  Rational lambda{1};
  Rational rho{0};
  Rational u{-1};
  Rational log_a{0};
  Rational log_b{1};

  Rational log_ab() const { return log_a + log_b; }

  /// Throws std::invalid_argument for alpha < 1 and NonInvertibleConstantTerm
  /// for lambda = u.
  void validate() const;
  std::string str() const;
};

/// (Ei_{k,rho}(log_rho(1 + (1-u) t ln ab)) / (lambda b^t - u a^{-t}))^alpha,
/// i.e. the generating function of the numbers at x = y = z = 0.
Series<Rational> scalar_quotient(const GParams& p, std::size_t order);

/// e_rho^x(t) e_rho^y(t^2) e_rho^z(t^3).
template <RingElement R>
Series<R> hermite_weight(const R& x, const R& y, const R& z, const Rational& rho, std::size_t order) {
  const Series<R> ex = deg_exp(x, rho, order);
  const Series<R> ey = fps_substitute_power(deg_exp(y, rho, order), 2);
  const Series<R> ez = fps_substitute_power(deg_exp(z, rho, order), 3);
  return fps_mul(fps_mul(ex, ey), ez);
}

/// The full generating function at (x, y, z) in any coefficient ring. The
/// scalar quotient is built once over Rational and lifted.
template <RingElement R>
Series<R> master_gf(const GParams& p, const R& x, const R& y, const R& z, std::size_t order) {
  const Series<R> q = lift<R>(scalar_quotient(p, order));
  return fps_mul(q, hermite_weight(x, y, z, p.rho, order));
}

/// n-th polynomial value at a rational point.
Rational ghat(std::size_t n, const GParams& p, const Rational& x, const Rational& y, const Rational& z);
/// Values for n = 0..n_max from one series build.
std::vector<Rational> ghat_row(std::size_t n_max, const GParams& p, const Rational& x, const Rational& y,
                               const Rational& z);
/// The n-th polynomial as an element of Q[x, y, z].
TriPoly ghat_poly(std::size_t n, const GParams& p);

enum class FamilyId {
  genocchi,
  genocchi_order,
  apostol_genocchi,
  apostol_genocchi_order,
  frobenius_genocchi_order,
  poly_genocchi,
  poly_genocchi_t2,
  kurt_abc,
  kurt_abc_t2,
  carlitz_deg_bernoulli,
  carlitz_deg_euler,
  deg_genocchi,
  deg_frobenius_euler,
  deg_euler_genocchi_r,
  deg_poly_euler,
  hermite2,
  hermite3,
  araci_hfg,
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
const std::vector<FamilyId>& all_families();

/// Superset of every registry family's parameters; each family reads the
/// fields it needs. `lambda` is the Apostol multiplier, `lambda_deg` the
/// degeneracy parameter of the Carlitz-style families, `rho` the degeneracy
/// of the polyexponential families, `order` the power applied to the base
/// quotient.
struct FamilyParams {
  Rational x{0};
  Rational y{0};
  Rational z{0};
  Rational lambda{1};
  Rational lambda_deg{0};
  Rational rho{0};
  Rational u{-1};
  Rational log_a{0};
  Rational log_b{1};
  Rational log_c{1};
  int k = 1;
  int order = 1;
  int r = 1;
};

Series<Rational> family_series(FamilyId id, const FamilyParams& params, std::size_t order);
Rational family_value(FamilyId id, std::size_t n, const FamilyParams& params);

/// Compares a parameter specialization of the master generating function
/// against the target family's own generating function, coefficient by
/// coefficient through `order`. Items:
///   1  k = 1 (polyexponential numerator collapses to (1-u) t ln ab)
///   2  x = y = z = 0 (numbers)
///   3  a = 1, b = e
///   4  rho = 0 (classical exponentials); with k = 1 also against araci_hfg
///   5  lambda = 1 on top of item 3
///   6  k = 1, a = 1, b = e, rho = 0 against araci_hfg (and its lambda = 1 case)
/// Mismatches are recorded in the report, never thrown.
VerifyReport reduce_check(int item, const GParams& p, const Rational& x, const Rational& y, const Rational& z,
                          std::size_t order);

}  // namespace gpg

#endif  // GPG_FAMILIES_HPP
