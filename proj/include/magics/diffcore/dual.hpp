#pragma once

#include <cmath>

namespace magics::diffcore {

// First-order dual number: carries a value and one directional derivative.
// Composing a reverse-mode sweep over Dual arithmetic yields exact
// Hessian-vector products and mixed second-order blocks.
struct Dual {
  double v{0.0};
  double d{0.0};

  constexpr Dual() = default;
  constexpr Dual(double value) : v(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(double value, double dot) : v(value), d(dot) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(const Dual& a, const Dual& b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return {q, (a.d - q * b.d) * inv};
}

inline bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
inline bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
inline bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
inline bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }

inline Dual tanh(const Dual& x) {
  const double t = std::tanh(x.v);
  return {t, x.d * (1.0 - t * t)};
}
inline Dual exp(const Dual& x) {
  const double e = std::exp(x.v);
  return {e, x.d * e};
}
inline Dual log(const Dual& x) { return {std::log(x.v), x.d / x.v}; }
inline Dual sqrt(const Dual& x) {
  const double s = std::sqrt(x.v);
  return {s, 0.5 * x.d / s};
}
inline Dual sin(const Dual& x) { return {std::sin(x.v), x.d * std::cos(x.v)}; }
inline Dual cos(const Dual& x) { return {std::cos(x.v), -x.d * std::sin(x.v)}; }

inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.v; }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Dual& x) {
  return std::isfinite(x.v) && std::isfinite(x.d);
}

}  // namespace magics::diffcore
