#include "scensched/rational.hpp"

#include <cctype>

#include "scensched/error.hpp"

namespace scensched {

Rational::Rational(Cost numerator) : num_(numerator), den_(1) {}

Rational::Rational(Cost numerator, Cost denominator) {
  if (denominator == 0) throw ContractError("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Cost g = gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator+(const Rational& other) const {
  Cost g = gcd(den_, other.den_);
  Cost scale = other.den_ / g;
  return {num_ * scale + other.num_ * (den_ / g), den_ * scale};
}

Rational Rational::operator-(const Rational& other) const {
  return *this + Rational(-other.num_, other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  Cost g1 = gcd(num_, other.den_);
  Cost g2 = gcd(other.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {(num_ / g1) * (other.num_ / g2), (den_ / g2) * (other.den_ / g1)};
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) throw ContractError("division by zero rational");
  return *this * Rational(other.den_, other.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  Cost lhs = num_ * other.den_;
  Cost rhs = other.num_ * den_;
  return lhs <=> rhs;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return scensched::to_string(num_);
  return scensched::to_string(num_) + "/" + scensched::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_cost(text.substr(0, slash));
    auto den = parse_cost(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    bool negative = !whole_part.empty() && whole_part.front() == '-';
    if (negative) whole_part.remove_prefix(1);
    if (frac_part.empty() || frac_part.size() > 30) return std::nullopt;
    auto whole = whole_part.empty() ? std::optional<Cost>(0) : parse_cost(whole_part);
    if (!whole || *whole < 0) return std::nullopt;
    Cost scale = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      scale *= 10;
    }
    auto frac = parse_cost(frac_part);
    if (!frac) return std::nullopt;
    Rational value(*whole * scale + *frac, scale);
    return negative ? Rational(0) - value : value;
  }
  auto whole = parse_cost(text);
  if (!whole) return std::nullopt;
  return Rational(*whole);
}

}  // namespace scensched
