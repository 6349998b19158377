#pragma once

#include <Eigen/Core>
#include <span>
#include <stdexcept>

#include "magics/diffcore/parameter_vector.hpp"
#include "magics/diffcore/scalar_function.hpp"

namespace magics::diffcore {

struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct HessianCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDenseHessianCap = 20000;

double evaluate(const ScalarFunction& f, std::span<const ParameterVector> groups);

// d f / d groups[wrt]; throws NonFiniteError when f overflows.
Eigen::VectorXd gradient(const ScalarFunction& f,
                         std::span<const ParameterVector> groups,
                         std::size_t wrt);

// (d^2 f / d p d q) z for p = groups[grad_wrt], q = groups[dir_wrt]; the
// block is never materialized. With grad_wrt == dir_wrt this is an exact
// Hessian-vector product.
Eigen::VectorXd mixed_jvp(const ScalarFunction& f,
                          std::span<const ParameterVector> groups,
                          std::size_t grad_wrt, std::size_t dir_wrt,
                          const Eigen::VectorXd& direction);

Eigen::VectorXd hessian_vector_product(const ScalarFunction& f,
                                       std::span<const ParameterVector> groups,
                                       std::size_t wrt,
                                       const Eigen::VectorXd& v);

// d^2 f / d p d q as a |p| x |q| matrix, one dual pass per column of q.
Eigen::MatrixXd mixed_partial_block(const ScalarFunction& f,
                                    std::span<const ParameterVector> groups,
                                    std::size_t rows_wrt, std::size_t cols_wrt,
                                    int cap = kDenseHessianCap);

// Unsymmetrized Hessian, assembled column by column. Refuses |p| > cap.
Eigen::MatrixXd dense_hessian_raw(const ScalarFunction& f,
                                  std::span<const ParameterVector> groups,
                                  std::size_t wrt, int cap = kDenseHessianCap);

// (H + H^T) / 2 of dense_hessian_raw.
Eigen::MatrixXd dense_hessian(const ScalarFunction& f,
                              std::span<const ParameterVector> groups,
                              std::size_t wrt, int cap = kDenseHessianCap);

// Direct dense solve of (A + damping I) x = b. Throws SingularSystemError
// when damping is zero and A is rank-deficient.
Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& A, const Eigen::MatrixXd& b,
                             double damping = 0.0);

// --- single-group conveniences ---------------------------------------------

double evaluate(const ScalarFunction& f, const ParameterVector& p);
Eigen::VectorXd gradient(const ScalarFunction& f, const ParameterVector& p);
Eigen::VectorXd hessian_vector_product(const ScalarFunction& f,
                                       const ParameterVector& p,
                                       const Eigen::VectorXd& v);
Eigen::MatrixXd dense_hessian(const ScalarFunction& f, const ParameterVector& p,
                              int cap = kDenseHessianCap);

}  // namespace magics::diffcore
