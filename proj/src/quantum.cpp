#include "gpt/quantum.hpp"

#include <cmath>
#include <string>

namespace gpt {

DensityMatrix::DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0)
    throw DimensionMismatch("DensityMatrix: matrix must be square and nonempty");
  if (!is_hermitian(rho_, tol::kEigenvalue)) throw InvariantViolation("DensityMatrix: not Hermitian");
  const double lo = eigenvalues_hermitian(rho_).minCoeff();
  if (lo < -tol::kEigenvalue)
    throw InvariantViolation("DensityMatrix: eigenvalue " + std::to_string(lo) + " is negative");
  if (std::abs(rho_.trace().real() - 1.0) > tol::kEigenvalue)
    throw InvariantViolation("DensityMatrix: trace differs from 1");
}

State DensityMatrix::state() const { return State::from_matrix(Theory::quantum(dim()), rho_); }

ChoiMap kraus_to_choi(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("kraus_to_choi: empty Kraus list");
  const int d = static_cast<int>(kraus.front().rows());
  ChoiMap c{CMatrix::Zero(d * d, d * d), d};
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) throw DimensionMismatch("kraus_to_choi: Kraus operator size");
    CVector v(d * d);
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < d; ++i) v(a * d + i) = k(i, a);
    c.matrix += v * v.adjoint();
  }
  return c;
}

bool cp_check(const ChoiMap& c) {
  if (!is_hermitian(c.matrix, tol::kEigenvalue)) return false;
  if (eigenvalues_hermitian(c.matrix).minCoeff() < -tol::kEigenvalue) return false;
  return eigenvalues_hermitian(partial_trace(c.matrix, c.d, c.d, 1)).maxCoeff() <= 1.0 + tol::kEigenvalue;
}

BipartiteState::BipartiteState(CMatrix rho, int d) : rho_(std::move(rho)), d_(d) {
  if (rho_.dim() != d * d) throw DimensionMismatch("BipartiteState: expected a d^2 x d^2 matrix");
}

BipartiteState max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: d must be at least 2");
  CVector omega = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return BipartiteState(omega * omega.adjoint(), d);
}

BipartiteState product_state(const CMatrix& rho1, const CMatrix& rho2) {
  if (rho1.rows() != rho2.rows()) throw DimensionMismatch("product_state: factor dimensions differ");
  return BipartiteState(kron(rho1, rho2), static_cast<int>(rho1.rows()));
}

State local_state(const BipartiteState& joint, int slot) {
  const int d = joint.d();
  return State::from_matrix(Theory::quantum(d), partial_trace(joint.matrix(), d, d, slot));
}

Weight local_weight(const Weight& joint, int d, int slot) {
  if (joint.theory().d() != d * d) throw DimensionMismatch("local_weight: joint dimension");
  return Weight::from_matrix(Theory::quantum(d), partial_trace(joint.matrix(), d, d, slot),
                             joint.generalized());
}

Weight apply_local(const Weight& joint, const Transformation& t, int slot) {
  const int d = t.theory().d();
  if (t.theory().backend() != Backend::quantum) throw BackendMismatch("apply_local: quantum backend required");
  if (joint.theory().d() != d * d) throw DimensionMismatch("apply_local: transformation acts on the wrong dimension");
  const CMatrix omega = joint.matrix();
  CMatrix out = CMatrix::Zero(d * d, d * d);
  // Omega = sum_ab |a><b| (x) Omega_ab.
  if (slot == 1) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        CMatrix unit_ab = CMatrix::Zero(d, d);
        unit_ab(a, b) = 1.0;
        out += kron(t.apply(unit_ab), omega.block(a * d, b * d, d, d));
      }
  } else if (slot == 2) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) out.block(a * d, b * d, d, d) = t.apply(omega.block(a * d, b * d, d, d));
  } else {
    throw std::invalid_argument("apply_local: slot must be 1 or 2");
  }
  return Weight::from_matrix(joint.theory(), hermitian_part(out), t.generalized() || joint.generalized());
}

Weight apply_local(const BipartiteState& joint, const Transformation& t, int slot) {
  if (t.theory().d() != joint.d()) throw DimensionMismatch("apply_local: transformation acts on the wrong dimension");
  return apply_local(static_cast<const Weight&>(joint.state()), t, slot);
}

bool no_signaling_check(const BipartiteState& joint, const Experiment& exp) {
  const Weight after = apply_local(joint, exp.deterministic(), 1);
  const CMatrix before2 = partial_trace(joint.matrix(), joint.d(), joint.d(), 2);
  const CMatrix after2 = partial_trace(after.matrix(), joint.d(), joint.d(), 2);
  return (before2 - after2).cwiseAbs().maxCoeff() <= tol::kProbability;
}

double trace_distance(const CMatrix& a, const CMatrix& b) { return 0.5 * trace_norm(a - b); }

// ---------------------------------------------------------------- Sampler

double Sampler::uniform() { return unif_(rng_); }

CMatrix Sampler::ginibre(int rows, int cols) {
  CMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss_(rng_);
      const double im = gauss_(rng_);
      g(i, j) = Complex(re, im);
    }
  return g;
}

CMatrix Sampler::haar_unitary(int d) {
  const CMatrix g = ginibre(d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is exactly Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

CVector Sampler::random_pure(int d) { return haar_unitary(d).col(0); }

CMatrix Sampler::random_density(int d) {
  const CMatrix g = ginibre(d, d);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

State Sampler::random_state(const Theory& theory) {
  const int d = theory.d();
  if (theory.backend() == Backend::classical) {
    std::exponential_distribution<double> expo(1.0);
    RVector p(d);
    for (int i = 0; i < d; ++i) p(i) = expo(rng_);
    p /= p.sum();
    return State(theory, p);
  }
  return State::from_matrix(theory, random_density(d));
}

Effect Sampler::random_effect(const Theory& theory) {
  const int d = theory.d();
  RVector u(d);
  for (int i = 0; i < d; ++i) u(i) = uniform();
  if (theory.backend() == Backend::classical) return Effect(theory, u);
  const CMatrix v = haar_unitary(d);
  return Effect::from_matrix(theory, hermitian_part(v * u.cast<Complex>().asDiagonal() * v.adjoint()));
}

Effect Sampler::random_generalized_effect(const Theory& theory) {
  RVector c(theory.dim());
  for (int i = 0; i < c.size(); ++i) c(i) = gauss_(rng_);
  return Effect(theory, c, true);
}

Transformation Sampler::random_cp(const Theory& theory) {
  const int d = theory.d();
  const double s = 1.0 - uniform();  // (0, 1]
  if (theory.backend() == Backend::classical) {
    RMatrix t(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t(i, j) = uniform();
    t *= s / t.colwise().sum().maxCoeff();
    // Classical basis is |i><i|, so the Schrodinger matrix is the transition matrix.
    return Transformation::from_schrodinger(theory, t);
  }
  const CMatrix g = ginibre(d * d, d * d);
  CMatrix w = hermitian_part(g * g.adjoint());
  w *= s / eigenvalues_hermitian(partial_trace(w, d, d, 1)).maxCoeff();
  return Transformation::from_choi(theory, w);
}

Transformation Sampler::random_generalized(const Theory& theory) {
  const Transformation a = random_cp(theory);
  const Transformation b = random_cp(theory);
  return a - b;
}

BipartiteState Sampler::random_bipartite(int d) { return BipartiteState(random_density(d * d), d); }

}  // namespace gpt
