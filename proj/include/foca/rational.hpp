#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace foca {

/// Exact rational number with a gcd-reduced, positive denominator.
///
/// Grades and goal means stay exact through every aggregation step; only the
/// final formula evaluation converts to double. The magnitudes involved
/// (values in [0,100], denominators from small means) are far below the
/// int64 range, so overflow checking is not needed here.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "75" for integers, "175/3" otherwise.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, std::int64_t k);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Arithmetic mean; empty input yields 0.
Rational mean(const std::vector<Rational>& values);

}  // namespace foca
