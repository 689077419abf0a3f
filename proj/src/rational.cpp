#include "foca/rational.hpp"

#include <numeric>

namespace foca {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, std::int64_t k) {
  return Rational(a.num_, a.den_ * k);
}

Rational mean(const std::vector<Rational>& values) {
  if (values.empty()) return Rational(0);
  Rational sum(0);
  for (const auto& v : values) sum = sum + v;
  return sum / static_cast<std::int64_t>(values.size());
}

}  // namespace foca
