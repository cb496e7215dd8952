#include "gpt/faithful.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace gpt {

bool is_symmetric(const BipartiteState& phi) {
  const CMatrix s = swap_operator(phi.d());
  return (s * phi.matrix() * s - phi.matrix()).cwiseAbs().maxCoeff() <= tol::kEigenvalue;
}

RMatrix local_action_matrix(const BipartiteState& phi, int slot) {
  const int d = phi.d();
  const Theory q = Theory::quantum(d);
  const int n = q.dim();
  const CMatrix id = CMatrix::Identity(d, d);
  RMatrix m(n * n, n * n);
  // Reduced operators Tr_1[(B_j (x) I) Phi] (slot 1) or Tr_2[(I (x) B_j) Phi] (slot 2).
  std::vector<CMatrix> reduced;
  for (int j = 0; j < n; ++j) {
    if (slot == 1)
      reduced.push_back(partial_trace(kron(q.basis(j), id) * phi.matrix(), d, d, 2));
    else if (slot == 2)
      reduced.push_back(partial_trace(kron(id, q.basis(j)) * phi.matrix(), d, d, 1));
    else
      throw std::invalid_argument("local_action_matrix: slot must be 1 or 2");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix image = slot == 1 ? kron(q.basis(i), reduced[static_cast<std::size_t>(j)])
                                      : kron(reduced[static_cast<std::size_t>(j)], q.basis(i));
      m.col(i * n + j) = hermitian_to_real(hermitian_part(image));
    }
  return m;
}

int dynamical_rank(const BipartiteState& phi) { return numerical_rank(local_action_matrix(phi, 1)); }

bool is_dynamically_faithful(const BipartiteState& phi) {
  const int n = phi.d() * phi.d();
  return dynamical_rank(phi) == n * n;
}

PreparationWitness prepare_witness(const BipartiteState& phi, const State& target) {
  const int d = phi.d();
  if (target.theory().d() != d) throw DimensionMismatch("prepare_witness: target dimension");
  // Linear map X -> Tr_1[(X (x) I) Phi] on Hermitian d x d matrices.
  RMatrix lmap(d * d, d * d);
  for (int k = 0; k < d * d; ++k) {
    const CMatrix x = real_to_hermitian(RVector::Unit(d * d, k), d);
    lmap.col(k) = hermitian_to_real(hermitian_part(partial_trace(kron(x, CMatrix::Identity(d, d)) * phi.matrix(), d, d, 2)));
  }
  const RVector rhs = hermitian_to_real(target.matrix());
  Eigen::CompleteOrthogonalDecomposition<RMatrix> cod(lmap);
  const RVector sol = cod.solve(rhs);
  const double residual = (lmap * sol - rhs).norm();
  if (residual > tol::kProbability)
    throw NotFaithful("prepare_witness: target not reachable from slot 1 (residual " + std::to_string(residual) + ")");
  const CMatrix x = real_to_hermitian(sol, d);
  const RVector ev = eigenvalues_hermitian(x);
  if (ev.minCoeff() < -tol::kProbability)
    throw NotFaithful("prepare_witness: the required effect is not positive");
  if (ev.maxCoeff() <= tol::kProbability) throw NotFaithful("prepare_witness: vanishing witness effect");
  const CMatrix effect = x / ev.maxCoeff();
  return {Transformation::from_kraus(Theory::quantum(d), {sqrt_psd(effect)}), 1.0 / ev.maxCoeff()};
}

bool is_preparationally_faithful(const BipartiteState& phi) {
  if (!is_dynamically_faithful(phi)) return false;
  const int d = phi.d();
  const int joint = d * d;
  const Theory q = Theory::quantum(d);
  const int n = q.dim();
  const RMatrix lmap = local_action_matrix(phi, 1);
  Eigen::PartialPivLU<RMatrix> lu(lmap);

  // g maps joint Hermitian coordinates to Choi coordinates of the preimage.
  RMatrix g(joint * joint, joint * joint);
  for (int k = 0; k < joint * joint; ++k) {
    const RVector s = lu.solve(RVector::Unit(joint * joint, k));
    RMatrix smat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) smat(i, j) = s(i * n + j);
    g.col(k) = hermitian_to_real(Transformation::from_schrodinger(q, smat, true).choi());
  }
  auto apply_g = [&](const CMatrix& herm) { return real_to_hermitian(g * hermitian_to_real(herm), joint); };

  CMatrix choi_g = CMatrix::Zero(joint * joint, joint * joint);
  for (int a = 0; a < joint; ++a)
    for (int b = 0; b < joint; ++b) {
      CMatrix e = CMatrix::Zero(joint, joint);
      e(a, b) = 1.0;
      const CMatrix h1 = 0.5 * (e + e.adjoint());
      const CMatrix h2 = (e - e.adjoint()) / (2.0 * kI);
      choi_g.block(a * joint, b * joint, joint, joint) = apply_g(h1) + kI * apply_g(h2);
    }
  const RVector ev = eigenvalues_hermitian(choi_g);
  const double scale = ev.cwiseAbs().maxCoeff();
  return ev.minCoeff() >= -tol::kRankRelative * scale;
}

double bilinear_form(const BipartiteState& phi, const Effect& a, const Effect& b) {
  if (a.theory().d() != phi.d() || b.theory().d() != phi.d())
    throw DimensionMismatch("bilinear_form: effects must act on a single subsystem");
  return (kron(a.matrix(), b.matrix()) * phi.matrix()).trace().real();
}

RMatrix bilinear_gram(const BipartiteState& phi) {
  const Theory q = Theory::quantum(phi.d());
  const int n = q.dim();
  RMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = (kron(q.basis(i), q.basis(j)) * phi.matrix()).trace().real();
  return g;
}

SpectralSplit spectral_split(const BipartiteState& phi) {
  const RMatrix g = bilinear_gram(phi);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > tol::kEigenvalue)
    throw NotSymmetric("spectral_split: the bilinear form is not symmetric");
  Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (g + g.transpose()));
  const RVector& ev = es.eigenvalues();
  const RMatrix& v = es.eigenvectors();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) <= tol::kEigenvalue) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", ev(i));
      throw DegenerateSplit(std::string("spectral_split: eigenvalue ") + buf + " within cutoff of zero");
    }

  const auto n = ev.size();
  SpectralSplit split{Theory::quantum(phi.d()), RMatrix::Zero(n, n), RMatrix::Zero(n, n), 0, 0, ev, g, RMatrix()};
  for (Eigen::Index i = 0; i < n; ++i) {
    const RMatrix proj = v.col(i) * v.col(i).transpose();
    if (ev(i) > 0) {
      split.p_plus += proj;
      ++split.n_plus;
    } else {
      split.p_minus += proj;
      ++split.n_minus;
    }
  }
  split.gram_abs = v * ev.cwiseAbs().asDiagonal() * v.transpose();
  return split;
}

Effect sigma(const SpectralSplit& split, const Effect& e) {
  require_same_backend(split.theory, e.theory(), "sigma");
  const RVector c = split.sigma() * e.coords();
  if (!e.generalized()) {
    const RVector ev = eigenvalues_hermitian(split.theory.matrix(c));
    if (ev.minCoeff() < -tol::kProbability || ev.maxCoeff() > 1.0 + tol::kProbability)
      throw ConeViolation("sigma: image of a physical effect leaves [0, I]");
  }
  return Effect(split.theory, c, e.generalized());
}

State state_sigma(const SpectralSplit& split, const State& omega) {
  require_same_backend(split.theory, omega.theory(), "state_sigma");
  const RVector c = split.sigma() * omega.coords();
  const RVector ev = eigenvalues_hermitian(split.theory.matrix(c));
  if (ev.minCoeff() < -tol::kProbability) throw ConeViolation("state_sigma: image is not a state");
  return State(split.theory, c);
}

}  // namespace gpt
