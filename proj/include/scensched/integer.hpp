#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace scensched {

using Weight = std::int64_t;

// Costs are accumulated in 128 bits; weights are 64-bit, so n^2 * W fits for
// any n that can be held in memory.
using Cost = __int128;

inline constexpr Cost kCostMax = static_cast<Cost>(
    (static_cast<unsigned __int128>(1) << 127) - 1);

std::string to_string(Cost value);

/// Parses a decimal integer (optional leading '-') into a Cost.
std::optional<Cost> parse_cost(std::string_view text);

/// Returns a*b, or nullopt if the product leaves [0, kCostMax]. Both factors
/// must be nonnegative.
std::optional<Cost> checked_mul(Cost a, Cost b);
std::optional<Cost> checked_add(Cost a, Cost b);

bool fits_int64(Cost value);

Cost gcd(Cost a, Cost b);

struct CostHash {
  std::size_t operator()(Cost value) const noexcept {
    auto u = static_cast<unsigned __int128>(value);
    auto lo = static_cast<std::uint64_t>(u);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    return static_cast<std::size_t>(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace scensched
