#pragma once

#include <cstdint>
#include <string>

#include "tsl/errors.hpp"

namespace tsl {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 x = neg ? u128(-(v + 1)) + 1 : u128(v);
  char buf[48];
  int i = 48;
  while (x) {
    buf[--i] = char('0' + int(x % 10));
    x /= 10;
  }
  std::string s(buf + i, buf + 48);
  return neg ? "-" + s : s;
}

// Exact rational on 128-bit integers, always normalized (den > 0, gcd = 1).
// Identity checks in the sieve modules rely on these being exact; any overflow
// throws instead of wrapping.
class Rat {
 public:
  Rat() = default;
  Rat(i128 n) : num_(n), den_(1) {}
  Rat(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

  static Rat zero() { return Rat(); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const { return double(num_) / double(den_); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
               checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw precondition_error("Rat: division by zero");
    return Rat(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string to_string() const {
    if (den_ == 1) return i128_to_string(num_);
    return i128_to_string(num_) + "/" + i128_to_string(den_);
  }

 private:
  static i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw resource_error("Rat: 128-bit overflow (mul)");
    return r;
  }
  static i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw resource_error("Rat: 128-bit overflow (add)");
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ == 0) throw precondition_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    i128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace tsl
