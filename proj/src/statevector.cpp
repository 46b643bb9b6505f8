#include "statevector.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "compiler.hpp"

namespace fermiq {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_ < 1 || n_ > qubit_cap())
    throw ResourceError("statevector qubit count out of range 1.." +
                        std::to_string(qubit_cap()));
  a_ = Vector::Zero(static_cast<Eigen::Index>(dim()));
  a_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, Vector amplitudes) : n_(n_qubits) {
  if (n_ < 1 || n_ > qubit_cap())
    throw ResourceError("statevector qubit count out of range");
  if (amplitudes.size() != static_cast<Eigen::Index>(dim()))
    throw DimensionError("amplitude vector has wrong length");
  a_ = std::move(amplitudes);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw DimensionError("basis index out of range");
  s.a_.setZero();
  s.a_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void StateVector::normalize() {
  double nn = a_.norm();
  if (nn < 1e-300) throw ContractError("cannot normalize a null state");
  a_ /= nn;
}

Complex StateVector::inner(const StateVector& o) const {
  if (o.n_ != n_) throw DimensionError("inner: qubit counts differ");
  return a_.dot(o.a_);  // Eigen dot conjugates the left operand
}

double StateVector::occupation(int p) const {
  if (p < 1 || p > n_) throw DimensionError("occupation: qubit out of range");
  std::uint64_t pos = std::uint64_t{1} << (n_ - p);
  double v = 0;
  for (std::uint64_t i = 0; i < dim(); ++i)
    if (i & pos) v += std::norm(a_(static_cast<Eigen::Index>(i)));
  return v;
}

double StateVector::total_occupation() const {
  double v = 0;
  for (int p = 1; p <= n_; ++p) v += occupation(p);
  return v;
}

void StateVector::apply_gate_inplace(const Gate& g) {
  std::uint64_t d = dim();
  std::uint64_t cpos = 0;
  if (g.control) {
    if (*g.control < 1 || *g.control > n_)
      throw DimensionError("gate control out of range");
    cpos = std::uint64_t{1} << (n_ - *g.control);
  }

  if (g.kind == GateKind::GlobalPhase) {
    Complex phase = std::exp(Complex(0, -g.param));
    for (std::uint64_t i = 0; i < d; ++i)
      if (!cpos || (i & cpos)) a_(static_cast<Eigen::Index>(i)) *= phase;
    return;
  }

  if (g.target < 1 || g.target > n_)
    throw DimensionError("gate target out of range");
  std::uint64_t tpos = std::uint64_t{1} << (n_ - g.target);
  if (cpos == tpos) throw ContractError("gate control equals target");

  switch (g.kind) {
    case GateKind::Cnot: {
      for (std::uint64_t i = 0; i < d; ++i)
        if ((i & cpos) && !(i & tpos))
          std::swap(a_(static_cast<Eigen::Index>(i)),
                    a_(static_cast<Eigen::Index>(i | tpos)));
      return;
    }
    case GateKind::Tphase: {
      Complex phase = std::exp(Complex(0, -g.param));
      for (std::uint64_t i = 0; i < d; ++i)
        if ((i & tpos) && (!cpos || (i & cpos)))
          a_(static_cast<Eigen::Index>(i)) *= phase;
      return;
    }
    case GateKind::Rz: {
      Complex p0 = std::exp(Complex(0, -g.param / 2));
      Complex p1 = std::exp(Complex(0, g.param / 2));
      for (std::uint64_t i = 0; i < d; ++i) {
        if (cpos && !(i & cpos)) continue;
        a_(static_cast<Eigen::Index>(i)) *= (i & tpos) ? p1 : p0;
      }
      return;
    }
    default: {
      Matrix u = gate_matrix(Gate{g.kind, g.target, {}, g.param});
      for (std::uint64_t i = 0; i < d; ++i) {
        if (i & tpos) continue;
        if (cpos && !(i & cpos)) continue;
        auto i0 = static_cast<Eigen::Index>(i);
        auto i1 = static_cast<Eigen::Index>(i | tpos);
        Complex v0 = a_(i0), v1 = a_(i1);
        a_(i0) = u(0, 0) * v0 + u(0, 1) * v1;
        a_(i1) = u(1, 0) * v0 + u(1, 1) * v1;
      }
      return;
    }
  }
}

void StateVector::apply_circuit_inplace(const Circuit& c) {
  if (c.n_qubits() != n_)
    throw DimensionError("run_circuit: qubit counts differ");
  for (const auto& g : c.gates()) apply_gate_inplace(g);
}

void StateVector::apply_matrix_inplace(const Matrix& u) {
  if (u.rows() != a_.size() || u.cols() != a_.size())
    throw DimensionError("apply_matrix: dimension mismatch");
  a_ = u * a_;
}

void StateVector::apply_controlled_matrix_inplace(const Matrix& u,
                                                  int control) {
  if (control < 1 || control > n_)
    throw DimensionError("controlled matrix: control out of range");
  std::uint64_t cpos = std::uint64_t{1} << (n_ - control);
  Eigen::Index sub = static_cast<Eigen::Index>(dim() >> 1);
  if (u.rows() != sub || u.cols() != sub)
    throw DimensionError("controlled matrix: dimension mismatch");
  // gather the control=1 branch in basis order of the remaining qubits
  Vector branch(sub);
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(sub));
  Eigen::Index k = 0;
  for (std::uint64_t i = 0; i < dim(); ++i)
    if (i & cpos) {
      idx[static_cast<std::size_t>(k)] = static_cast<Eigen::Index>(i);
      branch(k++) = a_(static_cast<Eigen::Index>(i));
    }
  branch = u * branch;
  for (Eigen::Index m = 0; m < sub; ++m) a_(idx[static_cast<std::size_t>(m)]) = branch(m);
}

StateVector apply_gate(const StateVector& s, const Gate& g) {
  StateVector out = s;
  out.apply_gate_inplace(g);
  return out;
}

StateVector run_circuit(const StateVector& s, const Circuit& c) {
  StateVector out = s;
  out.apply_circuit_inplace(c);
  return out;
}

StateVector SpectralDecomposition::eigenstate(int k, int n_qubits) const {
  if (k < 0 || k >= eigenvalues.size())
    throw DimensionError("eigenstate index out of range");
  return StateVector(n_qubits, eigenvectors.col(k));
}

SpectralDecomposition diagonalize(const PauliSum& h) {
  if (!h.is_hermitian(1e-12))
    throw ContractError("diagonalize: operator is not Hermitian");
  Matrix m = h.to_matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw ContractError("diagonalize: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix exact_propagator(const SpectralDecomposition& d, double t) {
  Vector phases(d.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i)
    phases(i) = std::exp(Complex(0, -d.eigenvalues(i) * t));
  return d.eigenvectors * phases.asDiagonal() * d.eigenvectors.adjoint();
}

Matrix exact_propagator(const PauliSum& h, double t) {
  return exact_propagator(diagonalize(h), t);
}

Matrix compiled_propagator_matrix(const GroupedHamiltonian& g, double t,
                                  double dt, int order) {
  if (dt <= 0) throw ContractError("dt must be positive");
  long long full = static_cast<long long>(std::floor(t / dt + 1e-12));
  double remainder = t - static_cast<double>(full) * dt;
  if (remainder < 1e-12 * std::max(1.0, t)) remainder = 0;

  Eigen::Index dim = Eigen::Index{1} << g.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  if (full > 0) {
    Matrix slice = trotter_compile(g, dt, dt, order).to_matrix();
    for (long long k = 0; k < full; ++k) u = slice * u;
  }
  if (remainder > 0)
    u = trotter_compile(g, remainder, remainder, order).to_matrix() * u;
  return u;
}

double trotter_error(const GroupedHamiltonian& g, double t, double dt,
                     int order, TrotterMetric metric) {
  if (t <= 0) throw ContractError("trotter_error: t must be positive");
  PauliSum h = lower_grouped(g);
  SpectralDecomposition d = diagonalize(h);
  if (metric == TrotterMetric::OperatorNorm) {
    Matrix diff =
        compiled_propagator_matrix(g, t, dt, order) - exact_propagator(d, t);
    Eigen::JacobiSVD<Matrix> svd(diff);
    return svd.singularValues()(0);
  }
  // ground-energy metric via the ground-state autocorrelation phase
  StateVector psi0 = d.eigenstate(0, g.n_qubits);
  StateVector evolved = run_circuit(psi0, trotter_compile(g, t, dt, order));
  Complex z = psi0.inner(evolved);
  double e_est = -std::arg(z) / t;
  return std::abs(e_est - d.eigenvalues(0));
}

}  // namespace fermiq
