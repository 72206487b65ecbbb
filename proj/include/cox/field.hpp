#pragma once

#include <Eigen/Core>

#include <string>

#include "cox/errors.hpp"
#include "cox/rat64.hpp"

namespace cox {

// Coefficient type of the quartic field; see rat64.hpp for the range policy.
using Rational = Rat64;

// Element of the real quartic field Q(sqrt2, sqrt3), stored as
// a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients.
// Carries the Gram entries -cos(pi/m) for m in {2,3,4,6,inf} exactly,
// and is closed under the reflection arithmetic they generate.
class QF {
 public:
  Rational a, b, c, d;

  QF() : a(0), b(0), c(0), d(0) {}
  QF(int v) : a(v), b(0), c(0), d(0) {}  // NOLINT: implicit by design
  QF(Rational v) : a(std::move(v)), b(0), c(0), d(0) {}
  QF(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static QF sqrt2() { return QF(0, 1, 0, 0); }
  static QF sqrt3() { return QF(0, 0, 1, 0); }
  static QF sqrt6() { return QF(0, 0, 0, 1); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  QF operator-() const { return QF(-a, -b, -c, -d); }

  QF& operator+=(const QF& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  QF& operator-=(const QF& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }
  QF& operator*=(const QF& o) { *this = *this * o; return *this; }
  QF& operator/=(const QF& o) { *this = *this * o.inverse(); return *this; }

  friend QF operator+(QF x, const QF& y) { x += y; return x; }
  friend QF operator-(QF x, const QF& y) { x -= y; return x; }

  friend QF operator*(const QF& x, const QF& y) {
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
    return QF(x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d,
              x.a * y.b + x.b * y.a + 3 * (x.c * y.d + x.d * y.c),
              x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
              x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
  }
  friend QF operator/(const QF& x, const QF& y) { return x * y.inverse(); }

  friend bool operator==(const QF& x, const QF& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const QF& x, const QF& y) { return !(x == y); }

  // Galois conjugates.
  QF conj_sqrt2() const { return QF(a, -b, c, -d); }
  QF conj_sqrt3() const { return QF(a, b, -c, -d); }

  QF inverse() const {
    if (is_zero()) throw internal_error("QF: division by zero");
    const QF s2 = conj_sqrt2();
    const QF s3 = conj_sqrt3();
    const QF s23 = s2.conj_sqrt3();
    const QF num = s2 * s3 * s23;
    const QF norm = *this * num;
    if (!(norm.b == 0 && norm.c == 0 && norm.d == 0) || norm.a == 0)
      throw internal_error("QF: field norm not rational");
    const Rational inv = Rational(1) / norm.a;
    return QF(num.a * inv, num.b * inv, num.c * inv, num.d * inv);
  }

  // Exact sign via x + y*sqrt3 with x, y in Q(sqrt2).
  int sign() const {
    const int sx = sign_q2(a, b);
    const int sy = sign_q2(c, d);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Compare x^2 against 3*y^2 in Q(sqrt2).
    const Rational p = a * a + 2 * b * b - 3 * (c * c + 2 * d * d);
    const Rational q = 2 * a * b - 6 * c * d;
    const int sd = sign_q2(p, q);
    if (sd == 0) throw internal_error("QF: sign comparison degenerate");
    return sd > 0 ? sx : sy;
  }

  friend bool operator<(const QF& x, const QF& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QF& x, const QF& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QF& x, const QF& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QF& x, const QF& y) { return (x - y).sign() >= 0; }

  QF abs() const { return sign() < 0 ? -*this : *this; }

  // Deterministic total order on coefficients, used for container keys.
  // Not the numeric order.
  static int lex_compare(const QF& x, const QF& y) {
    if (x.a != y.a) return x.a < y.a ? -1 : 1;
    if (x.b != y.b) return x.b < y.b ? -1 : 1;
    if (x.c != y.c) return x.c < y.c ? -1 : 1;
    if (x.d != y.d) return x.d < y.d ? -1 : 1;
    return 0;
  }

  std::string str() const {
    auto rs = [](const Rational& r) { return r.str(); };
    std::string out = rs(a);
    if (b != 0) out += (b > 0 ? "+" : "") + rs(b) + "*r2";
    if (c != 0) out += (c > 0 ? "+" : "") + rs(c) + "*r3";
    if (d != 0) out += (d > 0 ? "+" : "") + rs(d) + "*r6";
    return out;
  }

  double to_double() const {
    return static_cast<double>(a) + static_cast<double>(b) * 1.4142135623730951 +
           static_cast<double>(c) * 1.7320508075688772 +
           static_cast<double>(d) * 2.449489742783178;
  }

 private:
  // Sign of p + q*sqrt2.
  static int sign_q2(const Rational& p, const Rational& q) {
    const int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    const Rational diff = p * p - 2 * q * q;
    const int sd = sgn(diff);
    if (sd == 0) throw internal_error("QF: sqrt2 sign comparison degenerate");
    return sd > 0 ? sp : sq;
  }
};

inline QF abs(const QF& x) { return x.abs(); }
inline int sign_of(const QF& x) { return x.sign(); }
inline bool is_zero(const QF& x) { return x.is_zero(); }

// True when every finite label of the matrix lies in {2,3,4,6}; only those
// (plus infinity) have Gram entries inside Q(sqrt2, sqrt3).
inline bool label_in_exact_field(int m) {
  return m == 0 || m == 2 || m == 3 || m == 4 || m == 6;
}

// -cos(pi/m); the label 0 encodes m = infinity.
inline QF minus_cos_pi_over(int m) {
  switch (m) {
    case 0: return QF(-1);
    case 2: return QF(0);
    case 3: return QF(Rational(-1, 2));
    case 4: return QF(0, Rational(-1, 2), 0, 0);
    case 6: return QF(0, 0, Rational(-1, 2), 0);
    default:
      throw internal_error("minus_cos_pi_over: label " + std::to_string(m) +
                           " is outside the exact field");
  }
}

}  // namespace cox

namespace Eigen {

template <>
struct NumTraits<cox::QF> : GenericNumTraits<cox::QF> {
  typedef cox::QF Real;
  typedef cox::QF NonInteger;
  typedef cox::QF Nested;
  typedef cox::QF Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
