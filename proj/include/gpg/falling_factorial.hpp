#ifndef GPG_FALLING_FACTORIAL_HPP
#define GPG_FALLING_FACTORIAL_HPP

#include <cstddef>

#include "gpg/ring.hpp"

namespace gpg {

/// Degenerate falling factorial (x)_{n,rho} = x (x - rho) ... (x - (n-1) rho).
template <RingElement R>
R dff(const R& xval, std::size_t n, const Rational& rho) {
  R acc{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) acc = acc * (xval - R(rho * Rational(i)));
  return acc;
}

}  // namespace gpg

#endif  // GPG_FALLING_FACTORIAL_HPP
