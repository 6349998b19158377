#pragma once

#include <cstdint>
#include <vector>

#include "magics/diffcore/dual.hpp"

namespace magics::diffcore {

template <class S>
class Tape;

// Handle to one tape entry. Carries the primal value so expression code can
// branch on magnitudes without touching the tape.
template <class S>
struct Var {
  Tape<S>* tape{nullptr};
  std::uint32_t index{0};
  S value{};
};

// Arena of at-most-binary operations recorded during a forward evaluation.
// A reverse sweep accumulates adjoints; with S = Dual the sweep propagates
// tangents through the adjoint recursion (forward-over-reverse).
template <class S>
class Tape {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  Var<S> input(S value) {
    nodes_.push_back(Node{kNone, kNone, S{}, S{}});
    return {this, static_cast<std::uint32_t>(nodes_.size() - 1), value};
  }

  Var<S> constant(double value) { return input(S{value}); }

  Var<S> unary(const Var<S>& a, S weight, S value) {
    nodes_.push_back(Node{a.index, kNone, weight, S{}});
    return {this, static_cast<std::uint32_t>(nodes_.size() - 1), value};
  }

  Var<S> binary(const Var<S>& a, const Var<S>& b, S wa, S wb, S value) {
    nodes_.push_back(Node{a.index, b.index, wa, wb});
    return {this, static_cast<std::uint32_t>(nodes_.size() - 1), value};
  }

  std::size_t size() const { return nodes_.size(); }

  void clear() { nodes_.clear(); }

  // Adjoints of every node with respect to the scalar at `output`.
  void adjoints(std::uint32_t output, std::vector<S>& adj) const {
    adj.assign(nodes_.size(), S{});
    adj[output] = S{1.0};
    for (std::size_t i = nodes_.size(); i-- > 0;) {
      const Node& n = nodes_[i];
      const S& a = adj[i];
      if (n.a != kNone) adj[n.a] += n.wa * a;
      if (n.b != kNone) adj[n.b] += n.wb * a;
    }
  }

 private:
  struct Node {
    std::uint32_t a;
    std::uint32_t b;
    S wa;
    S wb;
  };
  std::vector<Node> nodes_;
};

// --- arithmetic -------------------------------------------------------------

template <class S>
Var<S> operator+(const Var<S>& a, const Var<S>& b) {
  return a.tape->binary(a, b, S{1.0}, S{1.0}, a.value + b.value);
}
template <class S>
Var<S> operator+(const Var<S>& a, double c) {
  return a.tape->unary(a, S{1.0}, a.value + S{c});
}
template <class S>
Var<S> operator+(double c, const Var<S>& a) {
  return a + c;
}

template <class S>
Var<S> operator-(const Var<S>& a, const Var<S>& b) {
  return a.tape->binary(a, b, S{1.0}, S{-1.0}, a.value - b.value);
}
template <class S>
Var<S> operator-(const Var<S>& a, double c) {
  return a.tape->unary(a, S{1.0}, a.value - S{c});
}
template <class S>
Var<S> operator-(double c, const Var<S>& a) {
  return a.tape->unary(a, S{-1.0}, S{c} - a.value);
}
template <class S>
Var<S> operator-(const Var<S>& a) {
  return a.tape->unary(a, S{-1.0}, -a.value);
}

template <class S>
Var<S> operator*(const Var<S>& a, const Var<S>& b) {
  return a.tape->binary(a, b, b.value, a.value, a.value * b.value);
}
template <class S>
Var<S> operator*(const Var<S>& a, double c) {
  return a.tape->unary(a, S{c}, a.value * S{c});
}
template <class S>
Var<S> operator*(double c, const Var<S>& a) {
  return a * c;
}

template <class S>
Var<S> operator/(const Var<S>& a, const Var<S>& b) {
  const S inv = S{1.0} / b.value;
  const S q = a.value * inv;
  return a.tape->binary(a, b, inv, -q * inv, q);
}
template <class S>
Var<S> operator/(const Var<S>& a, double c) {
  return a * (1.0 / c);
}
template <class S>
Var<S> operator/(double c, const Var<S>& a) {
  const S inv = S{1.0} / a.value;
  return a.tape->unary(a, S{-c} * inv * inv, S{c} * inv);
}

// --- elementary functions ---------------------------------------------------

template <class S>
Var<S> tanh(const Var<S>& x) {
  using std::tanh;
  const S t = tanh(x.value);
  return x.tape->unary(x, S{1.0} - t * t, t);
}
template <class S>
Var<S> exp(const Var<S>& x) {
  using std::exp;
  const S e = exp(x.value);
  return x.tape->unary(x, e, e);
}
template <class S>
Var<S> log(const Var<S>& x) {
  using std::log;
  return x.tape->unary(x, S{1.0} / x.value, log(x.value));
}
template <class S>
Var<S> sqrt(const Var<S>& x) {
  using std::sqrt;
  const S s = sqrt(x.value);
  return x.tape->unary(x, S{0.5} / s, s);
}
template <class S>
Var<S> sin(const Var<S>& x) {
  using std::cos;
  using std::sin;
  return x.tape->unary(x, cos(x.value), sin(x.value));
}
template <class S>
Var<S> cos(const Var<S>& x) {
  using std::cos;
  using std::sin;
  return x.tape->unary(x, -sin(x.value), cos(x.value));
}
template <class S>
Var<S> square(const Var<S>& x) {
  return x.tape->unary(x, S{2.0} * x.value, x.value * x.value);
}

// Branch selection by primal value; the chosen argument gets unit weight.
template <class S>
Var<S> vmin(const Var<S>& a, const Var<S>& b) {
  return (value_of(a.value) <= value_of(b.value))
             ? a.tape->unary(a, S{1.0}, a.value)
             : b.tape->unary(b, S{1.0}, b.value);
}
template <class S>
Var<S> vmax(const Var<S>& a, const Var<S>& b) {
  return (value_of(a.value) >= value_of(b.value))
             ? a.tape->unary(a, S{1.0}, a.value)
             : b.tape->unary(b, S{1.0}, b.value);
}

}  // namespace magics::diffcore
