#include "magics/diffcore/derivatives.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace magics::diffcore {
namespace {

template <class S, class SeedFn>
Var<S> run_forward(const ScalarFunction& f, Tape<S>& tape,
                   std::span<const ParameterVector> groups, SeedFn seed,
                   VarGroups<S>& vars) {
  if (groups.size() != f.num_groups()) {
    throw DimensionError("wrong number of parameter groups");
  }
  vars.assign(groups.size(), {});
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const int n = groups[g].size();
    vars[g].reserve(n);
    for (int i = 0; i < n; ++i) {
      vars[g].push_back(tape.input(seed(g, i)));
    }
  }
  return f(tape, vars);
}

}  // namespace

double evaluate(const ScalarFunction& f, std::span<const ParameterVector> groups) {
  thread_local Tape<double> tape;
  tape.clear();
  VarGroups<double> vars;
  const Var<double> out = run_forward(
      f, tape, groups,
      [&](std::size_t g, int i) { return groups[g].values()[i]; }, vars);
  if (!std::isfinite(out.value)) {
    throw NonFiniteError("scalar function produced a non-finite value");
  }
  return out.value;
}

Eigen::VectorXd gradient(const ScalarFunction& f,
                         std::span<const ParameterVector> groups,
                         std::size_t wrt) {
  thread_local Tape<double> tape;
  thread_local std::vector<double> adj;
  tape.clear();
  VarGroups<double> vars;
  const Var<double> out = run_forward(
      f, tape, groups,
      [&](std::size_t g, int i) { return groups[g].values()[i]; }, vars);
  tape.adjoints(out.index, adj);
  Eigen::VectorXd grad(groups[wrt].size());
  for (int i = 0; i < grad.size(); ++i) grad[i] = adj[vars[wrt][i].index];
  if (!grad.allFinite() || !std::isfinite(out.value)) {
    throw NonFiniteError("gradient evaluation overflowed");
  }
  return grad;
}

Eigen::VectorXd mixed_jvp(const ScalarFunction& f,
                          std::span<const ParameterVector> groups,
                          std::size_t grad_wrt, std::size_t dir_wrt,
                          const Eigen::VectorXd& direction) {
  if (direction.size() != groups[dir_wrt].size()) {
    throw DimensionError("direction length does not match parameter group");
  }
  thread_local Tape<Dual> tape;
  thread_local std::vector<Dual> adj;
  tape.clear();
  VarGroups<Dual> vars;
  const Var<Dual> out = run_forward(
      f, tape, groups,
      [&](std::size_t g, int i) {
        const double dot = (g == dir_wrt) ? direction[i] : 0.0;
        return Dual{groups[g].values()[i], dot};
      },
      vars);
  tape.adjoints(out.index, adj);
  Eigen::VectorXd result(groups[grad_wrt].size());
  for (int i = 0; i < result.size(); ++i) {
    result[i] = adj[vars[grad_wrt][i].index].d;
  }
  if (!result.allFinite()) {
    throw NonFiniteError("second-order evaluation overflowed");
  }
  return result;
}

Eigen::VectorXd hessian_vector_product(const ScalarFunction& f,
                                       std::span<const ParameterVector> groups,
                                       std::size_t wrt, const Eigen::VectorXd& v) {
  return mixed_jvp(f, groups, wrt, wrt, v);
}

Eigen::MatrixXd mixed_partial_block(const ScalarFunction& f,
                                    std::span<const ParameterVector> groups,
                                    std::size_t rows_wrt, std::size_t cols_wrt,
                                    int cap) {
  const int rows = groups[rows_wrt].size();
  const int cols = groups[cols_wrt].size();
  if (rows > cap || cols > cap) {
    throw HessianCapExceeded("mixed partial block of size " + std::to_string(rows) +
                             "x" + std::to_string(cols) + " exceeds cap " +
                             std::to_string(cap));
  }
  Eigen::MatrixXd block(rows, cols);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(cols);
  for (int j = 0; j < cols; ++j) {
    e[j] = 1.0;
    block.col(j) = mixed_jvp(f, groups, rows_wrt, cols_wrt, e);
    e[j] = 0.0;
  }
  return block;
}

Eigen::MatrixXd dense_hessian_raw(const ScalarFunction& f,
                                  std::span<const ParameterVector> groups,
                                  std::size_t wrt, int cap) {
  const int n = groups[wrt].size();
  if (n > cap) {
    throw HessianCapExceeded("dense Hessian of dimension " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  }
  return mixed_partial_block(f, groups, wrt, wrt, cap);
}

Eigen::MatrixXd dense_hessian(const ScalarFunction& f,
                              std::span<const ParameterVector> groups,
                              std::size_t wrt, int cap) {
  Eigen::MatrixXd h = dense_hessian_raw(f, groups, wrt, cap);
  return 0.5 * (h + h.transpose()).eval();
}

Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& A, const Eigen::MatrixXd& b,
                             double damping) {
  if (A.rows() != A.cols()) throw DimensionError("matrix is not square");
  if (A.rows() != b.rows()) throw DimensionError("right-hand side rows mismatch");
  if (damping < 0.0) throw std::invalid_argument("negative damping");
  Eigen::MatrixXd M = A;
  M.diagonal().array() += damping;
  if (damping == 0.0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) {
      throw SingularSystemError("singular system with zero damping");
    }
    return lu.solve(b);
  }
  return Eigen::PartialPivLU<Eigen::MatrixXd>(M).solve(b);
}

// --- single-group conveniences ---------------------------------------------

double evaluate(const ScalarFunction& f, const ParameterVector& p) {
  return evaluate(f, std::span<const ParameterVector>(&p, 1));
}

Eigen::VectorXd gradient(const ScalarFunction& f, const ParameterVector& p) {
  return gradient(f, std::span<const ParameterVector>(&p, 1), 0);
}

Eigen::VectorXd hessian_vector_product(const ScalarFunction& f,
                                       const ParameterVector& p,
                                       const Eigen::VectorXd& v) {
  return hessian_vector_product(f, std::span<const ParameterVector>(&p, 1), 0, v);
}

Eigen::MatrixXd dense_hessian(const ScalarFunction& f, const ParameterVector& p,
                              int cap) {
  return dense_hessian(f, std::span<const ParameterVector>(&p, 1), 0, cap);
}

}  // namespace magics::diffcore
