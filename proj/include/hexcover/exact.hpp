#pragma once

// Exact arithmetic in Q(sqrt 3). Every point the planner produces on a
// honeycomb has coordinates of the form (p + q*sqrt3) * scale / 2 with
// rational p, q, so equality and ordering never need an epsilon.

#include <boost/rational.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>

namespace hexcover {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kSqrt3 = 1.7320508075688772935;

inline int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline double to_double(const Rational& v) {
  return static_cast<double>(v.numerator()) / static_cast<double>(v.denominator());
}

inline std::string to_string(const Rational& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

/// a + b*sqrt(3) with rational a, b.
struct QSqrt3 {
  Rational a{0};
  Rational b{0};

  QSqrt3() = default;
  QSqrt3(Rational rat, Rational root3) : a(rat), b(root3) {}
  QSqrt3(std::int64_t rat) : a(rat) {}  // NOLINT(google-explicit-constructor)

  static QSqrt3 root3(Rational coefficient) { return {Rational{0}, coefficient}; }

  friend QSqrt3 operator+(const QSqrt3& l, const QSqrt3& r) { return {l.a + r.a, l.b + r.b}; }
  friend QSqrt3 operator-(const QSqrt3& l, const QSqrt3& r) { return {l.a - r.a, l.b - r.b}; }
  friend QSqrt3 operator-(const QSqrt3& v) { return {-v.a, -v.b}; }
  friend QSqrt3 operator*(const QSqrt3& l, const QSqrt3& r) {
    return {l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a};
  }
  friend QSqrt3 operator*(const Rational& s, const QSqrt3& v) { return {s * v.a, s * v.b}; }

  QSqrt3& operator+=(const QSqrt3& o) { return *this = *this + o; }
  QSqrt3& operator-=(const QSqrt3& o) { return *this = *this - o; }

  friend bool operator==(const QSqrt3& l, const QSqrt3& r) { return l.a == r.a && l.b == r.b; }

  /// Sign of a + b*sqrt3, decided without floating point.
  [[nodiscard]] int sign() const {
    const int sa = hexcover::sign(a);
    const int sb = hexcover::sign(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with 3 b^2
    const Rational diff = a * a - 3 * b * b;
    return sa * hexcover::sign(diff);
  }

  [[nodiscard]] QSqrt3 abs() const { return sign() < 0 ? -*this : *this; }

  [[nodiscard]] double to_double() const {
    return hexcover::to_double(a) + hexcover::to_double(b) * kSqrt3;
  }

  /// Numeric order of the represented real numbers.
  friend std::strong_ordering cmp_value(const QSqrt3& l, const QSqrt3& r) {
    const int s = (l - r).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

inline std::ostream& operator<<(std::ostream& os, const QSqrt3& v) {
  return os << to_string(v.a) << "+" << to_string(v.b) << "*sqrt3";
}

/// Floating-point plane coordinate (meters).
struct Point2 {
  double x{0};
  double y{0};

  friend Point2 operator+(Point2 l, Point2 r) { return {l.x + r.x, l.y + r.y}; }
  friend Point2 operator-(Point2 l, Point2 r) { return {l.x - r.x, l.y - r.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double squared_distance(Point2 p, Point2 q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double distance(Point2 p, Point2 q) { return std::sqrt(squared_distance(p, q)); }

/// Exact plane point: ((x.a + x.b*sqrt3) * scale/2, (y.a + y.b*sqrt3) * scale/2).
/// The representation is unique because sqrt3 is irrational, so structural
/// equality is geometric equality.
struct LatticePoint {
  QSqrt3 x;
  QSqrt3 y;

  LatticePoint() = default;
  LatticePoint(QSqrt3 px, QSqrt3 py) : x(px), y(py) {}
  LatticePoint(Rational x_rat, Rational x_root3, Rational y_rat, Rational y_root3)
      : x(x_rat, x_root3), y(y_rat, y_root3) {}

  friend LatticePoint operator+(const LatticePoint& l, const LatticePoint& r) {
    return {l.x + r.x, l.y + r.y};
  }
  friend LatticePoint operator-(const LatticePoint& l, const LatticePoint& r) {
    return {l.x - r.x, l.y - r.y};
  }
  friend LatticePoint operator*(const Rational& s, const LatticePoint& p) {
    return {s * p.x, s * p.y};
  }

  friend bool operator==(const LatticePoint& l, const LatticePoint& r) {
    return l.x == r.x && l.y == r.y;
  }

  /// Lexicographic on (x_rat, x_root3, y_rat, y_root3); a total order used for
  /// registries and stable output, not a geometric order.
  friend bool operator<(const LatticePoint& l, const LatticePoint& r) {
    return std::tie(l.x.a, l.x.b, l.y.a, l.y.b) < std::tie(r.x.a, r.x.b, r.y.a, r.y.b);
  }

  [[nodiscard]] Point2 to_point(double scale) const {
    return {x.to_double() * scale / 2.0, y.to_double() * scale / 2.0};
  }
};

/// Exact squared length in units of (scale/2)^2.
inline QSqrt3 squared_norm(const LatticePoint& p) { return p.x * p.x + p.y * p.y; }

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

}  // namespace hexcover
