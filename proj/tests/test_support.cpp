#include "test_util.hpp"

#include <Eigen/Eigenvalues>

namespace fermiq::test {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix ladder_matrix_oracle(int orbital, bool create, int n) {
  Matrix id = Matrix::Identity(2, 2);
  Matrix z(2, 2), sp(2, 2), sm(2, 2);
  z << 1, 0, 0, -1;
  sp << 0, 1, 0, 0;  // |0><1|
  sm << 0, 0, 1, 0;  // |1><0|
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q) {
    if (q < orbital)
      out = kron(out, id);
    else if (q == orbital)
      out = kron(out, create ? sm : sp);
    else
      out = kron(out, z);
  }
  return out;
}

Matrix expm_minus_i(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0, -solver.eigenvalues()(i) * t));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace fermiq::test
