#pragma once

#include <concepts>
#include <cstdint>
#include <limits>

namespace moonlight {

/// Integer path lengths, e.g. hop counts. Saturates at infinity().
struct HopDistance {
  using value_type = std::int64_t;

  static constexpr value_type zero() noexcept { return 0; }
  static constexpr value_type infinity() noexcept {
    return std::numeric_limits<value_type>::max();
  }
  static constexpr value_type accumulate(value_type a, value_type b) noexcept {
    if (a == infinity() || b == infinity()) return infinity();
    return a + b;
  }
  static constexpr double to_double(value_type d) noexcept {
    return d == infinity() ? std::numeric_limits<double>::infinity() : static_cast<double>(d);
  }
};

/// Real path lengths obtained by summing edge weights.
struct RealDistance {
  using value_type = double;

  static constexpr value_type zero() noexcept { return 0.0; }
  static constexpr value_type infinity() noexcept {
    return std::numeric_limits<double>::infinity();
  }
  static constexpr value_type accumulate(value_type a, value_type b) noexcept { return a + b; }
  static constexpr double to_double(value_type d) noexcept { return d; }
};

template <class Dist>
concept DistanceDomain = requires(typename Dist::value_type a) {
  { Dist::zero() } -> std::same_as<typename Dist::value_type>;
  { Dist::infinity() } -> std::same_as<typename Dist::value_type>;
  { Dist::accumulate(a, a) } -> std::same_as<typename Dist::value_type>;
  { Dist::to_double(a) } -> std::same_as<double>;
  requires std::totally_ordered<typename Dist::value_type>;
};

static_assert(DistanceDomain<HopDistance>);
static_assert(DistanceDomain<RealDistance>);

}  // namespace moonlight
