#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace apx {

// Exact rational arithmetic.  Values are always held in canonical form:
// denominator > 0 and gcd(|num|, den) == 1; zero is 0/1.  Solver and
// checker code never touches floating point, so every comparison and every
// ratio bound in the test suites is exact.
//
// Numerator and denominator live in 64 bits.  All intermediate products are
// taken in 128 bits and results are range-checked on the way back down;
// arithmetic that would leave the 64-bit range throws Error("Overflow")
// instead of silently wrapping.  The instances this library targets keep
// values far below that ceiling.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rat(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);  // throws on b == 0
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  // Accepts an optionally signed integer "p" or fraction "p/q".
  static Rat parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  static Rat make(__int128 num, __int128 den);

  long long num_;
  long long den_;
};

// Exact harmonic number H(n) = 1 + 1/2 + ... + 1/n, with H(0) = 0.
Rat harmonic(long long n);

}  // namespace apx
