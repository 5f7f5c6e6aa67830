#include "apx/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "apx/error.hpp"

namespace apx {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(i128 v) {
  if (v > i128(std::numeric_limits<long long>::max()) ||
      v < i128(std::numeric_limits<long long>::min())) {
    throw Error("Overflow", "rational arithmetic left the 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rat Rat::make(i128 num, i128 den) {
  if (den == 0) throw Error("DivideByZero", "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat();
  u128 g = gcd128(abs128(num), u128(den));
  Rat r;
  r.num_ = narrow(num / i128(g));
  r.den_ = narrow(den / i128(g));
  return r;
}

Rat::Rat(long long num, long long den) { *this = make(num, den); }

Rat Rat::operator-() const { return make(-i128(num_), den_); }

Rat operator+(const Rat& a, const Rat& b) {
  return Rat::make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat::make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat::make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) throw Error("DivideByZero", "rational division by zero");
  return Rat::make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rat Rat::parse(const std::string& text) {
  auto fail = [&]() -> Error {
    return Error("ParseError", "not a rational: \"" + text + "\"");
  };
  if (text.empty()) throw fail();
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) -> long long {
    if (part.empty()) throw fail();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw fail();
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) throw fail();
    }
    try {
      return std::stoll(part);
    } catch (const std::exception&) {
      throw fail();
    }
  };
  if (slash == std::string::npos) return Rat(parse_int(text, true));
  long long p = parse_int(text.substr(0, slash), true);
  long long q = parse_int(text.substr(slash + 1), false);
  if (q == 0) throw fail();
  return Rat(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

Rat harmonic(long long n) {
  Rat h;
  for (long long j = 1; j <= n; ++j) h += Rat(1, j);
  return h;
}

}  // namespace apx
