#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cox/errors.hpp"

namespace cox {

// Exact rational on 64-bit words with 128-bit intermediates. Desk-scale root
// arithmetic stays far inside this range; any overflow throws instead of
// wrapping, so results are exact or absent.
class Rat64 {
 public:
  Rat64() : n_(0), d_(1) {}
  Rat64(long long v) : n_(v), d_(1) {}  // NOLINT: implicit by design
  Rat64(int v) : n_(v), d_(1) {}        // NOLINT
  Rat64(long long num, long long den) : n_(num), d_(den) {
    if (d_ == 0) throw internal_error("Rat64: zero denominator");
    normalize_small();
  }

  long long numerator() const { return n_; }
  long long denominator() const { return d_; }

  int sign() const { return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0); }

  friend Rat64 operator+(const Rat64& x, const Rat64& y) {
    return from128(i128(x.n_) * y.d_ + i128(y.n_) * x.d_, i128(x.d_) * y.d_);
  }
  friend Rat64 operator-(const Rat64& x, const Rat64& y) {
    return from128(i128(x.n_) * y.d_ - i128(y.n_) * x.d_, i128(x.d_) * y.d_);
  }
  friend Rat64 operator*(const Rat64& x, const Rat64& y) {
    return from128(i128(x.n_) * y.n_, i128(x.d_) * y.d_);
  }
  friend Rat64 operator/(const Rat64& x, const Rat64& y) {
    if (y.n_ == 0) throw internal_error("Rat64: division by zero");
    return from128(i128(x.n_) * y.d_, i128(x.d_) * y.n_);
  }
  Rat64 operator-() const {
    Rat64 r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
  Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
  Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
  Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

  friend bool operator==(const Rat64& x, const Rat64& y) {
    return x.n_ == y.n_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Rat64& x, const Rat64& y) { return !(x == y); }
  friend bool operator<(const Rat64& x, const Rat64& y) {
    return i128(x.n_) * y.d_ < i128(y.n_) * x.d_;
  }
  friend bool operator>(const Rat64& x, const Rat64& y) { return y < x; }

  std::string str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  explicit operator double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

 private:
  using i128 = __int128;

  static Rat64 from128(i128 num, i128 den) {
    if (den == 0) throw internal_error("Rat64: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax)
      throw internal_error("Rat64: exact 64-bit arithmetic range exceeded");
    Rat64 r;
    r.n_ = static_cast<long long>(num);
    r.d_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize_small() {
    if (d_ < 0) {
      n_ = -n_;
      d_ = -d_;
    }
    const long long g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
  }

  long long n_;
  long long d_;
};

inline int sgn(const Rat64& r) { return r.sign(); }
inline long long numerator(const Rat64& r) { return r.numerator(); }
inline long long denominator(const Rat64& r) { return r.denominator(); }

}  // namespace cox
