#include "scensched/integer.hpp"

#include <algorithm>

namespace scensched {

std::string to_string(Cost value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  auto magnitude = negative ? -static_cast<unsigned __int128>(value)
                            : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<Cost> parse_cost(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  Cost value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    auto next = checked_mul(value, 10);
    if (!next) return std::nullopt;
    next = checked_add(*next, c - '0');
    if (!next) return std::nullopt;
    value = *next;
  }
  return negative ? -value : value;
}

std::optional<Cost> checked_mul(Cost a, Cost b) {
  Cost result;
  if (__builtin_mul_overflow(a, b, &result)) return std::nullopt;
  return result;
}

std::optional<Cost> checked_add(Cost a, Cost b) {
  Cost result;
  if (__builtin_add_overflow(a, b, &result)) return std::nullopt;
  return result;
}

bool fits_int64(Cost value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

Cost gcd(Cost a, Cost b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Cost t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace scensched
