#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "magics/diffcore/dual.hpp"
#include "magics/diffcore/tape.hpp"

namespace magics::diffcore {

template <class S>
using VarGroup = std::vector<Var<S>>;
template <class S>
using VarGroups = std::vector<VarGroup<S>>;

// A real-valued function of one or more parameter groups, evaluable on both
// the double tape (values, gradients) and the dual tape (second-order
// queries). Construct from a generic lambda
//
//   ScalarFunction f(2, [](auto& tape, const auto& g) { return g[0][0] * g[1][0]; });
//
// which must be deterministic given identical inputs; any sampled data is
// captured by value at construction time.
class ScalarFunction {
 public:
  template <class Fn>
  ScalarFunction(std::size_t num_groups, Fn fn)
      : num_groups_(num_groups),
        real_([fn](Tape<double>& t, const VarGroups<double>& g) { return fn(t, g); }),
        dual_([fn](Tape<Dual>& t, const VarGroups<Dual>& g) { return fn(t, g); }) {}

  std::size_t num_groups() const { return num_groups_; }

  Var<double> operator()(Tape<double>& tape, const VarGroups<double>& groups) const {
    return real_(tape, groups);
  }
  Var<Dual> operator()(Tape<Dual>& tape, const VarGroups<Dual>& groups) const {
    return dual_(tape, groups);
  }

 private:
  std::size_t num_groups_;
  std::function<Var<double>(Tape<double>&, const VarGroups<double>&)> real_;
  std::function<Var<Dual>(Tape<Dual>&, const VarGroups<Dual>&)> dual_;
};

}  // namespace magics::diffcore
