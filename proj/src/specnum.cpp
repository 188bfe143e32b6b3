#include "gpg/specnum.hpp"

#include <functional>
#include <string>

#include "gpg/errors.hpp"

namespace gpg {

namespace {

Rational int_pow(std::size_t base, int exponent) {
  return pow(Rational(base), exponent);
}

}  // namespace

Series<Rational> deg_log(const Rational& rho, std::size_t order) {
  Series<Rational> out(order);
  for (std::size_t n = 1; n <= order; ++n) {
    if (rho.is_zero())
      out[n] = Rational(n % 2 == 1 ? 1 : -1, n);
    else
      out[n] = rat_binomial(rho, n) / rho;
  }
  return out;
}

Series<Rational> binomial_series(const Rational& beta, std::size_t order) {
  Series<Rational> out(order);
  for (std::size_t n = 0; n <= order; ++n) out[n] = rat_binomial(beta, n);
  return out;
}

Series<Rational> polyexp(int k, const Rational& rho, std::size_t order) {
  Series<Rational> out(order);
  for (std::size_t n = 1; n <= order; ++n)
    out[n] = dff(Rational(1), n, rho) / (int_pow(n, k) * Rational(factorial(n - 1)));
  return out;
}

Series<Rational> polylog(int k, std::size_t order) {
  Series<Rational> out(order);
  for (std::size_t n = 1; n <= order; ++n) out[n] = inverse(int_pow(n, k));
  return out;
}

Rational deg_stirling(StirlingKind kind, std::size_t n, std::size_t j, const Rational& rho) {
  if (j > n)
    throw IndexOutOfRange("deg_stirling: j = " + std::to_string(j) + " exceeds n = " + std::to_string(n));
  if (j == 0) return n == 0 ? Rational(1) : Rational(0);
  const Series<Rational> base =
      kind == StirlingKind::first ? deg_log(rho, n) : deg_exp(Rational(1), rho, n) - Series<Rational>::one(n);
  return fps_pow(base, static_cast<int>(j)).egf(n) / Rational(factorial(j));
}

std::vector<std::vector<Rational>> deg_stirling_triangle(StirlingKind kind, std::size_t n_max,
                                                         const Rational& rho) {
  std::vector<std::vector<Rational>> s(n_max + 1, std::vector<Rational>(n_max + 1));
  s[0][0] = 1;
  // S1(n+1,k) = S1(n,k-1) + (k rho - n) S1(n,k);  S2(n+1,k) = S2(n,k-1) + (k - n rho) S2(n,k)
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const Rational prev = k > 0 ? s[n][k - 1] : Rational(0);
      const Rational weight = kind == StirlingKind::first ? Rational(k) * rho - Rational(n)
                                                          : Rational(k) - Rational(n) * rho;
      s[n + 1][k] = prev + weight * s[n][k];
    }
  }
  return s;
}

EulerianTable eulerian_table(std::size_t n_max) {
  EulerianTable t;
  t.rows.resize(n_max + 1);
  t.rows[0] = {Integer(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto& row = t.rows[n];
    row.assign(n + 1, Integer(0));
    for (std::size_t k = 0; k <= n; ++k) {
      Integer v = 0;
      if (k >= 1) v += Integer(static_cast<unsigned long>(n - k + 1)) * t.at(n - 1, k - 1);
      v += Integer(static_cast<unsigned long>(k)) * t.at(n - 1, k);
      row[k] = v;
    }
  }
  return t;
}

Rational eulerian_poly(const EulerianTable& table, std::size_t m, const Rational& z) {
  if (m > table.n_max()) return eulerian_poly(m, z);
  Rational acc;
  Rational power = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    acc += Rational(table.at(m, k)) * power;
    power *= z;
  }
  return acc;
}

Rational eulerian_poly(std::size_t m, const Rational& z) {
  return eulerian_poly(eulerian_table(m), m, z);
}

Rational geom_power_sum(const EulerianTable& table, const Rational& z, std::size_t m) {
  if (z == Rational(1)) throw PoleAtOne("geom_power_sum: pole at z = 1");
  return eulerian_poly(table, m, z) / pow(Rational(1) - z, static_cast<long>(m + 1));
}

Rational geom_power_sum(const Rational& z, std::size_t m) {
  return geom_power_sum(eulerian_table(m), z, m);
}

std::vector<Rational> deg_bernoulli2_row(std::size_t n_max, const Rational& rho, const Rational& xval) {
  // t / log_rho(1+t) = 1 / (log_rho(1+t) / t)
  const Series<Rational> reduced_log = fps_shift_down(deg_log(rho, n_max + 1), 1);
  const Series<Rational> q =
      fps_div(binomial_series(xval, n_max), reduced_log);
  return q.egf_all();
}

Rational deg_bernoulli2(std::size_t n, const Rational& rho, const Rational& xval) {
  return deg_bernoulli2_row(n, rho, xval).back();
}

namespace {

/// Coefficients (ascending) of prod_i (X - root_i).
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> p{Rational(1)};
  for (const auto& root : roots) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= root * p[i];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

WhitneyRow whitney_first(const Rational& m, const Rational& r, std::size_t n) {
  if (m.is_zero()) throw DegenerateBasis("whitney_first: m = 0 collapses the basis (m x + r)^j");
  // With X = m x + r: m^n (x)_n = prod_{i<n} (X - r - m i).
  std::vector<Rational> roots;
  roots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) roots.push_back(r + m * Rational(i));
  return WhitneyRow{m, r, n, poly_from_roots(roots)};
}

std::vector<Rational> whitney_tilde(const Rational& m, std::size_t n) {
  std::vector<Rational> roots;
  roots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) roots.push_back(m * Rational(i));
  return poly_from_roots(roots);
}

std::vector<Rational> bcoef_row(int k, std::size_t m_max, const Rational& u, const Rational& log_ab,
                                const Rational& rho) {
  if (k < 1) throw std::invalid_argument("bcoef: k must be >= 1");
  const Rational scale = (Rational(1) - u) * log_ab;
  std::vector<Rational> out(m_max + 1);
  if (k == 1) {
    out[0] = scale;
    return out;
  }
  const std::vector<Rational> b = deg_bernoulli2_row(m_max, rho, rho - Rational(1));
  const std::size_t parts = static_cast<std::size_t>(k - 1);

  for (std::size_t m = 0; m <= m_max; ++m) {
    // Sum over compositions m_1 + ... + m_{k-1} = m of
    //   multinomial(m; m_1..m_{k-1}) prod_i b_{m_i} / (m_1 + ... + m_i + 1).
    Rational total;
    std::function<void(std::size_t, std::size_t, Rational)> walk = [&](std::size_t part, std::size_t prefix,
                                                                       Rational weight) {
      if (part == parts - 1) {
        const std::size_t last = m - prefix;
        total += weight * b[last] * Rational(binomial(m - prefix, last)) / Rational(m + 1);
        return;
      }
      for (std::size_t mi = 0; prefix + mi <= m; ++mi) {
        // multinomial built as a product of binomials over the remaining mass
        const Rational w = weight * Rational(binomial(m - prefix, mi)) * b[mi] / Rational(prefix + mi + 1);
        walk(part + 1, prefix + mi, w);
      }
    };
    walk(0, 0, Rational(1));
    out[m] = pow(scale, static_cast<long>(m + 1)) * total;
  }
  return out;
}

Rational bcoef(int k, std::size_t m, const Rational& u, const Rational& log_ab, const Rational& rho) {
  return bcoef_row(k, m, u, log_ab, rho)[m];
}

}  // namespace gpg
