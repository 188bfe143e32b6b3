#include "gpg/families.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gpg/errors.hpp"

namespace gpg {

using RSeries = Series<Rational>;

void GParams::validate() const {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1, got " + std::to_string(alpha));
  if (lambda == u)
    throw NonInvertibleConstantTerm("lambda = u = " + u.str() +
                                    ": the denominator lambda b^t - u a^{-t} has zero constant term");
}

std::string GParams::str() const {
  std::ostringstream os;
  os << "k=" << k << " alpha=" << alpha << " lambda=" << lambda << " rho=" << rho << " u=" << u
     << " log_a=" << log_a << " log_b=" << log_b;
  return os.str();
}

namespace {

RSeries apostol_frobenius_denominator(const Rational& lambda, const Rational& u, const Rational& log_a,
                                      const Rational& log_b, std::size_t order) {
  return scale(exp_series(log_b, order), lambda) - scale(exp_series(-log_a, order), u);
}

}  // namespace

Series<Rational> scalar_quotient(const GParams& p, std::size_t order) {
  p.validate();
  const Rational w = (Rational(1) - p.u) * p.log_ab();
  const RSeries inner = fps_dilate(deg_log(p.rho, order), w);
  const RSeries num = fps_compose(polyexp(p.k, p.rho, order), inner);
  const RSeries den = apostol_frobenius_denominator(p.lambda, p.u, p.log_a, p.log_b, order);
  return fps_pow(fps_div(num, den), p.alpha);
}

std::vector<Rational> ghat_row(std::size_t n_max, const GParams& p, const Rational& x, const Rational& y,
                               const Rational& z) {
  return master_gf<Rational>(p, x, y, z, n_max).egf_all();
}

Rational ghat(std::size_t n, const GParams& p, const Rational& x, const Rational& y, const Rational& z) {
  return master_gf<Rational>(p, x, y, z, n).egf(n);
}

TriPoly ghat_poly(std::size_t n, const GParams& p) {
  return master_gf<TriPoly>(p, TriPoly::variable(Var::x), TriPoly::variable(Var::y),
                            TriPoly::variable(Var::z), n)
      .egf(n);
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct FamilyEntry {
  FamilyId id;
  std::string_view name;
};

constexpr std::array<FamilyEntry, 18> kFamilies{{
    {FamilyId::genocchi, "genocchi"},
    {FamilyId::genocchi_order, "genocchi_order"},
    {FamilyId::apostol_genocchi, "apostol_genocchi"},
    {FamilyId::apostol_genocchi_order, "apostol_genocchi_order"},
    {FamilyId::frobenius_genocchi_order, "frobenius_genocchi_order"},
    {FamilyId::poly_genocchi, "poly_genocchi"},
    {FamilyId::poly_genocchi_t2, "poly_genocchi_t2"},
    {FamilyId::kurt_abc, "kurt_abc"},
    {FamilyId::kurt_abc_t2, "kurt_abc_t2"},
    {FamilyId::carlitz_deg_bernoulli, "carlitz_deg_bernoulli"},
    {FamilyId::carlitz_deg_euler, "carlitz_deg_euler"},
    {FamilyId::deg_genocchi, "deg_genocchi"},
    {FamilyId::deg_frobenius_euler, "deg_frobenius_euler"},
    {FamilyId::deg_euler_genocchi_r, "deg_euler_genocchi_r"},
    {FamilyId::deg_poly_euler, "deg_poly_euler"},
    {FamilyId::hermite2, "hermite2"},
    {FamilyId::hermite3, "hermite3"},
    {FamilyId::araci_hfg, "araci_hfg"},
}};

void require_unit(const Rational& constant, std::string_view family, const std::string& condition) {
  if (constant.is_zero())
    throw NonInvertibleConstantTerm(std::string(family) + ": denominator vanishes at t = 0 (" + condition + ")");
}

/// c / (lambda e^t + 1) style quotients share this shape: num / den with a
/// diagnostic when den(0) = 0.
RSeries checked_div(const RSeries& num, const RSeries& den, std::string_view family,
                    const std::string& condition) {
  require_unit(den[0], family, condition);
  return fps_div(num, den);
}

RSeries times(const RSeries& a, const Rational& c) { return scale(a, c); }

/// 2t / (lambda e^t + 1)
RSeries apostol_genocchi_base(const Rational& lambda, std::size_t n, std::string_view family) {
  const RSeries num = times(RSeries::variable(n), 2);
  const RSeries den = times(exp_series(Rational(1), n), lambda) + RSeries::one(n);
  return checked_div(num, den, family, "lambda = -1");
}

/// (1-u) t / (lambda e^t - u)
RSeries frobenius_base(const Rational& lambda, const Rational& u, std::size_t n, std::string_view family) {
  const RSeries num = times(RSeries::variable(n), Rational(1) - u);
  const RSeries den = times(exp_series(Rational(1), n), lambda) - RSeries::constant(n, u);
  return checked_div(num, den, family, "lambda = u");
}

RSeries hermite2_series(const Rational& x, const Rational& y, std::size_t n) {
  return fps_mul(exp_series(x, n), fps_substitute_power(exp_series(y, n), 2));
}

/// Li_k(1 - e^{-c t})
RSeries polylog_of_exp(int k, const Rational& c, std::size_t n) {
  const RSeries inner = RSeries::one(n) - exp_series(-c, n);
  return fps_compose(polylog(k, n), inner);
}

/// e_lambda(t) = e_lambda^1(t)
RSeries deg_e(const Rational& lambda, std::size_t n) { return deg_exp(Rational(1), lambda, n); }

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& e : kFamilies)
    if (e.id == id) return e.name;
  throw std::invalid_argument("unknown family id");
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& e : kFamilies)
    if (e.name == name) return e.id;
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& e : kFamilies) v.push_back(e.id);
    return v;
  }();
  return ids;
}

Series<Rational> family_series(FamilyId id, const FamilyParams& f, std::size_t n) {
  const std::string_view name = family_name(id);
  const RSeries ext = exp_series(f.x, n);
  switch (id) {
    case FamilyId::genocchi:
      return fps_mul(apostol_genocchi_base(1, n, name), ext);
    case FamilyId::genocchi_order:
      return fps_mul(fps_pow(apostol_genocchi_base(1, n, name), f.order), ext);
    case FamilyId::apostol_genocchi:
      return fps_mul(apostol_genocchi_base(f.lambda, n, name), ext);
    case FamilyId::apostol_genocchi_order:
      return fps_mul(fps_pow(apostol_genocchi_base(f.lambda, n, name), f.order), ext);
    case FamilyId::frobenius_genocchi_order:
      return fps_mul(fps_pow(frobenius_base(1, f.u, n, name), f.order), ext);
    case FamilyId::poly_genocchi: {
      const RSeries num = times(polylog_of_exp(f.k, 1, n), 2);
      const RSeries den = exp_series(Rational(1), n) + RSeries::one(n);
      return fps_mul(fps_div(num, den), ext);
    }
    case FamilyId::poly_genocchi_t2: {
      const RSeries num = polylog_of_exp(f.k, 2, n);
      const RSeries den = exp_series(Rational(1), n) + RSeries::one(n);
      return fps_mul(fps_div(num, den), ext);
    }
    case FamilyId::kurt_abc:
    case FamilyId::kurt_abc_t2: {
      const Rational c = (id == FamilyId::kurt_abc ? Rational(1) : Rational(2)) * (f.log_a + f.log_b);
      const RSeries num = times(polylog_of_exp(f.k, c, n), 2);
      const RSeries den = exp_series(-f.log_a, n) + exp_series(f.log_b, n);
      return fps_mul(fps_div(num, den), exp_series(f.x * f.log_c, n));
    }
    case FamilyId::carlitz_deg_bernoulli: {
      // t / (e_lambda(t) - 1) = 1 / ((e_lambda(t) - 1) / t)
      const RSeries reduced = fps_shift_down(deg_e(f.lambda_deg, n + 1) - RSeries::one(n + 1), 1);
      return fps_mul(fps_div(RSeries::one(n), reduced), deg_exp(f.x, f.lambda_deg, n));
    }
    case FamilyId::carlitz_deg_euler: {
      const RSeries den = deg_e(f.lambda_deg, n) + RSeries::one(n);
      return fps_mul(fps_div(RSeries::constant(n, 2), den), deg_exp(f.x, f.lambda_deg, n));
    }
    case FamilyId::deg_genocchi:
    case FamilyId::deg_euler_genocchi_r: {
      const std::size_t shift = id == FamilyId::deg_genocchi ? 1 : static_cast<std::size_t>(f.r);
      if (id == FamilyId::deg_euler_genocchi_r && f.r < 0)
        throw std::invalid_argument(std::string(name) + ": r must be >= 0");
      const RSeries num = fps_shift_up(RSeries::constant(n, 2), shift);
      const RSeries den = deg_e(f.lambda_deg, n) + RSeries::one(n);
      return fps_mul(fps_div(num, den), deg_exp(f.x, f.lambda_deg, n));
    }
    case FamilyId::deg_frobenius_euler: {
      const RSeries den = deg_e(f.lambda_deg, n) - RSeries::constant(n, f.u);
      return fps_mul(checked_div(RSeries::constant(n, Rational(1) - f.u), den, name, "u = 1"),
                     deg_exp(f.x, f.lambda_deg, n));
    }
    case FamilyId::deg_poly_euler: {
      // 2 Ei_{k,rho}(log_rho(1+t)) / (t (e_rho(t) + 1)); the numerator has valuation 1
      const RSeries ei = fps_compose(polyexp(f.k, f.rho, n + 1), deg_log(f.rho, n + 1));
      const RSeries num = times(fps_shift_down(ei, 1), 2);
      const RSeries den = deg_e(f.rho, n) + RSeries::one(n);
      return fps_mul(fps_div(num, den), deg_exp(f.x, f.rho, n));
    }
    case FamilyId::hermite2:
      return hermite2_series(f.x, f.y, n);
    case FamilyId::hermite3:
      return hermite_weight(f.x, f.y, f.z, Rational(0), n);
    case FamilyId::araci_hfg:
      return fps_mul(fps_pow(frobenius_base(f.lambda, f.u, n, name), f.order),
                     hermite_weight(f.x, f.y, f.z, Rational(0), n));
  }
  throw std::invalid_argument("unknown family id");
}

Rational family_value(FamilyId id, std::size_t n, const FamilyParams& params) {
  return family_series(id, params, n).egf(n);
}

// ---------------------------------------------------------------------------
// Reductions

namespace {

std::string point_str(const Rational& x, const Rational& y, const Rational& z) {
  return "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
}

void compare_series(VerifyReport& report, const std::string& label, const std::string& params,
                    const RSeries& specialized, const RSeries& target) {
  for (std::size_t n = 0; n <= specialized.order(); ++n)
    report.check(label, params, n, specialized.egf(n), target.egf(n));
}

void record_precondition(VerifyReport& report, const std::string& label, const std::string& params,
                         const std::string& why) {
  CaseRecord c;
  c.label = label;
  c.params = params;
  c.status = CaseStatus::precondition;
  c.note = why;
  report.add(std::move(c));
}

/// (numerator / (lambda b^t - u a^{-t}))^alpha with the numerator supplied.
RSeries quotient_power(const RSeries& numerator, const GParams& p, std::size_t n) {
  const RSeries den = apostol_frobenius_denominator(p.lambda, p.u, p.log_a, p.log_b, n);
  return fps_pow(fps_div(numerator, den), p.alpha);
}

/// t sum_m B(m) t^m / m! through order n.
RSeries numerator_from_bcoef(const GParams& p, std::size_t n) {
  const std::vector<Rational> b = bcoef_row(p.k, n, p.u, p.log_ab(), p.rho);
  RSeries out(n);
  for (std::size_t m = 0; m + 1 <= n; ++m) out[m + 1] = b[m] / Rational(factorial(m));
  return out;
}

FamilyParams araci_params(const GParams& p, const Rational& x, const Rational& y, const Rational& z) {
  FamilyParams f;
  f.x = x;
  f.y = y;
  f.z = z;
  f.lambda = p.lambda;
  f.u = p.u;
  f.order = p.alpha;
  return f;
}

}  // namespace

VerifyReport reduce_check(int item, const GParams& p_in, const Rational& x, const Rational& y, const Rational& z,
                          std::size_t n) {
  VerifyReport report;
  report.suite = "reduction_" + std::to_string(item);
  const std::string point = point_str(x, y, z);

  GParams p = p_in;
  switch (item) {
    case 1: p.k = 1; break;
    case 2: break;
    case 3: p.log_a = 0; p.log_b = 1; break;
    case 4: p.rho = 0; break;
    case 5: p.log_a = 0; p.log_b = 1; p.lambda = 1; break;
    case 6: p.k = 1; p.log_a = 0; p.log_b = 1; p.rho = 0; break;
    default: throw std::invalid_argument("reduce_check: item must be in 1..6");
  }
  const std::string label = "reduction_" + std::to_string(item);
  const std::string params = p.str() + " " + point;
  if (p.lambda == p.u) {
    record_precondition(report, label, params, "lambda = u after specialization");
    return report;
  }

  const RSeries lhs = master_gf<Rational>(p, x, y, z, n);
  const RSeries weight = hermite_weight(x, y, z, p.rho, n);

  switch (item) {
    case 1: {
      const RSeries num = times(RSeries::variable(n), (Rational(1) - p.u) * p.log_ab());
      compare_series(report, label, params, lhs, fps_mul(quotient_power(num, p, n), weight));
      break;
    }
    case 2: {
      // Numerator via the B-coefficient expansion when available, otherwise by composition.
      const RSeries num = p.k >= 1
                              ? numerator_from_bcoef(p, n)
                              : fps_compose(polyexp(p.k, p.rho, n),
                                            fps_dilate(deg_log(p.rho, n), (Rational(1) - p.u) * p.log_ab()));
      const RSeries origin = master_gf<Rational>(p, Rational(0), Rational(0), Rational(0), n);
      compare_series(report, label, p.str() + " origin", origin, quotient_power(num, p, n));
      break;
    }
    case 3:
    case 5: {
      // (Ei_{k,rho}(log_rho(1 + (1-u)t)) / (lambda e^t - u))^alpha
      const RSeries num = fps_compose(polyexp(p.k, p.rho, n), fps_dilate(deg_log(p.rho, n), Rational(1) - p.u));
      const RSeries den = times(exp_series(Rational(1), n), p.lambda) - RSeries::constant(n, p.u);
      const RSeries numbers = fps_pow(fps_div(num, den), p.alpha);
      compare_series(report, label, params, lhs, fps_mul(numbers, weight));
      compare_series(report, label + "_numbers", p.str() + " origin",
                     master_gf<Rational>(p, Rational(0), Rational(0), Rational(0), n), numbers);
      if (item == 3)
        report.add_deviation({"reduction_3",
                              "right side carries e_rho^x(t) e_rho^y(t^2) only",
                              "right side carries e_rho^x(t) e_rho^y(t^2) e_rho^z(t^3)",
                              "the left side is the three-variable polynomial; the z factor of the "
                              "master generating function survives a = 1, b = e"});
      else
        report.add_deviation({"reduction_5",
                              "weight printed as e^{xt + yt^2 + zt^3} while Ei_{k,rho}, log_rho keep rho",
                              "weight e_rho^x(t) e_rho^y(t^2) e_rho^z(t^3)",
                              "lambda = 1 does not touch rho; the classical weight is only correct at rho = 0"});
      break;
    }
    case 4: {
      const RSeries num =
          fps_compose(polyexp(p.k, Rational(0), n), fps_dilate(deg_log(Rational(0), n), (Rational(1) - p.u) * p.log_ab()));
      FamilyParams h;
      h.x = x;
      h.y = y;
      h.z = z;
      compare_series(report, label, params, lhs,
                     fps_mul(quotient_power(num, p, n), family_series(FamilyId::hermite3, h, n)));
      // k = 1, a = 1, b = e at rho = 0 is the Hermite-based Apostol-type Frobenius-Genocchi family.
      GParams q = p;
      q.k = 1;
      q.log_a = 0;
      q.log_b = 1;
      compare_series(report, label + "_araci", q.str() + " " + point, master_gf<Rational>(q, x, y, z, n),
                     family_series(FamilyId::araci_hfg, araci_params(q, x, y, z), n));
      break;
    }
    case 6: {
      compare_series(report, label, params, lhs, family_series(FamilyId::araci_hfg, araci_params(p, x, y, z), n));
      GParams q = p;
      q.lambda = 1;
      if (q.lambda == q.u) {
        record_precondition(report, label + "_lambda1", q.str() + " " + point, "lambda = u = 1");
      } else {
        compare_series(report, label + "_lambda1", q.str() + " " + point, master_gf<Rational>(q, x, y, z, n),
                       family_series(FamilyId::araci_hfg, araci_params(q, x, y, z), n));
      }
      break;
    }
    default:
      break;
  }
  return report;
}

}  // namespace gpg
