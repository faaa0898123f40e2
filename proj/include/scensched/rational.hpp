#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "scensched/integer.hpp"

namespace scensched {

/// Exact rational number with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Cost numerator);  // NOLINT(google-explicit-constructor)
  Rational(Cost numerator, Cost denominator);

  Cost numerator() const { return num_; }
  Cost denominator() const { return den_; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }

  bool operator==(const Rational& other) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  double to_double() const;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Accepts "p", "p/q" and decimal literals such as "0.125".
  static std::optional<Rational> parse(std::string_view text);

 private:
  Cost num_ = 0;
  Cost den_ = 1;
};

}  // namespace scensched
