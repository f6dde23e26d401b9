#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Geometry and bound reports never touch floating point;
// everything here stays exact or throws.

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace otd {

class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) fail(Errc::invalid_input, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { return make(-i128(num_), den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  // Canonical text form: "n" for integers, "n/d" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "n", "n/d", and exact decimal strings like "-1.25".
  static Rat parse(const std::string& text);

  static Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

 private:
  using i128 = __int128;

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(Errc::invalid_input, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }

  static Rat make(i128 n, i128 d) {
    if (d == 0) fail(Errc::invalid_input, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n;
    i128 g = gcd128(a, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr i128 lim = i128(INT64_MAX);
    if (n > lim || n < -lim || d > lim) fail(Errc::internal, "rational overflow");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Largest q >= 0 with q*q <= v; v must be >= 0.
std::int64_t isqrt64(std::int64_t v);

}  // namespace otd
