#ifndef GPG_RING_HPP
#define GPG_RING_HPP

#include <concepts>

#include "gpg/rational.hpp"
#include "gpg/tripoly.hpp"

namespace gpg {

/// Coefficient ring usable by Series: a commutative ring containing the
/// rationals, with partial inversion of units.
template <class R>
concept RingElement = std::regular<R> && std::constructible_from<R, Rational> &&
    requires(const R a, const R b, const Rational q) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { a * q } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { is_zero(a) } -> std::convertible_to<bool>;
      { invertible(a) } -> std::convertible_to<bool>;
      { inverse(a) } -> std::convertible_to<R>;
    };

static_assert(RingElement<Rational>);
static_assert(RingElement<TriPoly>);

}  // namespace gpg

#endif  // GPG_RING_HPP
