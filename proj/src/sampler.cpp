#include "gpg/sampler.hpp"

namespace gpg {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long num_max, long den_max) {
  const long num = integer(-num_max, num_max);
  const long den = integer(1, den_max);
  return Rational(Integer(num), Integer(den));
}

Rational Sampler::nonzero_rational(long num_max, long den_max) {
  for (;;) {
    Rational r = rational(num_max, den_max);
    if (!r.is_zero()) return r;
  }
}

GParams Sampler::params(int alpha) {
  GParams p;
  p.k = static_cast<int>(integer(1, 3));
  p.alpha = alpha;
  p.rho = rational(3, 3);
  p.lambda = rational(4, 3);
  do {
    p.u = rational(4, 3);
  } while (p.u == p.lambda);
  p.log_a = rational(3, 3);
  p.log_b = rational(3, 3);
  return p;
}

}  // namespace gpg
