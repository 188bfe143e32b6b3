#ifndef GPG_SAMPLER_HPP
#define GPG_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "gpg/families.hpp"
#include "gpg/rational.hpp"

namespace gpg {

/// Seeded generator of small random rationals and parameter packs.
/// mt19937_64's output sequence is fixed by the standard, and the integer
/// mapping below is ours, so draws are identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  /// num / den with num in [-num_max, num_max], den in [1, den_max].
  Rational rational(long num_max, long den_max);
  Rational nonzero_rational(long num_max, long den_max);

  /// Admissible parameters (lambda != u) with k in [1, 3].
  GParams params(int alpha);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gpg

#endif  // GPG_SAMPLER_HPP
