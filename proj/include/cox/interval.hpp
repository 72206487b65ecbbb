#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "cox/errors.hpp"

namespace cox {

// Raised when an interval cannot decide a sign or equality query.
// Callers either refine, fall back to word arithmetic, or mark the result
// uncertified.
struct ambiguous_sign_error : std::runtime_error {
  explicit ambiguous_sign_error(const std::string& what) : std::runtime_error(what) {}
};

// Directed-rounding interval over double. Used as the root-coordinate scalar
// for Coxeter labels outside {2,3,4,6,inf}; every decision made through it is
// either strict (certain) or throws ambiguous_sign_error.
class IV {
 public:
  double lo = 0.0, hi = 0.0;

  IV() = default;
  IV(int v) : lo(v), hi(v) {}  // NOLINT: implicit by design
  IV(double v) : lo(v), hi(v) {}
  IV(double l, double h) : lo(l), hi(h) {}

  static IV widened(double v) {
    return IV(std::nextafter(v, -INFINITY), std::nextafter(v, INFINITY));
  }

  bool is_point() const { return lo == hi; }
  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }

  IV operator-() const { return IV(-hi, -lo); }

  friend IV operator+(const IV& x, const IV& y) {
    return IV(down(x.lo + y.lo), up(x.hi + y.hi));
  }
  friend IV operator-(const IV& x, const IV& y) {
    return IV(down(x.lo - y.hi), up(x.hi - y.lo));
  }
  friend IV operator*(const IV& x, const IV& y) {
    const double p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    return IV(down(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4))),
              up(std::fmax(std::fmax(p1, p2), std::fmax(p3, p4))));
  }
  IV& operator+=(const IV& o) { *this = *this + o; return *this; }
  IV& operator-=(const IV& o) { *this = *this - o; return *this; }
  IV& operator*=(const IV& o) { *this = *this * o; return *this; }

  int sign() const {
    if (lo > 0.0) return 1;
    if (hi < 0.0) return -1;
    if (lo == 0.0 && hi == 0.0) return 0;
    throw ambiguous_sign_error("interval sign straddles zero: [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  // Certain equality holds only for identical point intervals; overlap is
  // treated as "possibly equal" and the query refuses.
  friend bool operator==(const IV& x, const IV& y) {
    if (x.is_point() && y.is_point()) return x.lo == y.lo;
    if (x.hi < y.lo || y.hi < x.lo) return false;
    throw ambiguous_sign_error("interval equality undecidable");
  }
  friend bool operator!=(const IV& x, const IV& y) { return !(x == y); }

  // True when the intervals cannot be distinguished; used for root
  // deduplication on the uncertified path.
  static bool possibly_equal(const IV& x, const IV& y) {
    return !(x.hi < y.lo || y.hi < x.lo);
  }

 private:
  static double down(double v) { return std::nextafter(v, -INFINITY); }
  static double up(double v) { return std::nextafter(v, INFINITY); }
};

inline int sign_of(const IV& x) { return x.sign(); }
inline bool is_zero(const IV& x) { return x.lo == 0.0 && x.hi == 0.0; }

inline IV minus_cos_pi_over_iv(int m) {
  if (m == 0) return IV(-1);
  if (m == 2) return IV(0);
  const double v = -std::cos(M_PI / m);
  IV r = IV::widened(v);
  // One extra outward step absorbs the libm error bound.
  return IV(std::nextafter(r.lo, -INFINITY), std::nextafter(r.hi, INFINITY));
}

}  // namespace cox
