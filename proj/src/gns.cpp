#include "gpt/gns.hpp"

#include <cmath>
#include <string>

namespace gpt {

TransposeResult transpose_map_certified(const BipartiteState& phi, const Transformation& t) {
  const int d = phi.d();
  if (t.theory().d() != d || t.theory().backend() != Backend::quantum)
    throw DimensionMismatch("transpose_map: transformation must act on one quantum subsystem");
  const int n = t.theory().dim();
  const RMatrix right = local_action_matrix(phi, 2);
  const RVector rhs = hermitian_to_real(apply_local(phi, t, 1).matrix());

  Eigen::ColPivHouseholderQR<RMatrix> qr(right);
  qr.setThreshold(tol::kRankRelative);
  if (qr.rank() != n * n)
    throw NotFaithful("transpose_map: local action on slot 2 has rank " + std::to_string(qr.rank()) + " < " +
                      std::to_string(n * n));
  const RVector s = qr.solve(rhs);
  const double residual = (right * s - rhs).norm();
  if (residual >= tol::kResidual)
    throw NotFaithful("transpose_map: no transpose, residual " + std::to_string(residual));
  RMatrix smat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) smat(i, j) = s(i * n + j);
  return {Transformation::from_schrodinger(t.theory(), smat, true), residual};
}

Transformation transpose_map(const BipartiteState& phi, const Transformation& t) {
  return transpose_map_certified(phi, t).map;
}

Transformation conjugate_map(const SpectralSplit& split, const Transformation& t) {
  require_same_backend(split.theory, t.theory(), "conjugate_map");
  // Choi conjugation is X -> conj(M(conj X)); conj flips the sign of the
  // imaginary basis elements, so in coordinates it is D S D with D diagonal +-1.
  const Theory& q = t.theory();
  RVector sign(q.dim());
  for (int k = 0; k < q.dim(); ++k) sign(k) = q.basis(k).imag().cwiseAbs().maxCoeff() > 0.0 ? -1.0 : 1.0;
  const RMatrix s = sign.asDiagonal() * t.schrodinger() * sign.asDiagonal();
  return Transformation::from_schrodinger(q, s, t.generalized());
}

bool conjugation_consistent(const SpectralSplit& split, const Transformation& t) {
  const RVector lhs = conjugate_map(split, t).effect().coords();
  const RVector rhs = split.sigma() * t.effect().coords();
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol::kProbability;
}

Transformation adjoint_map(const BipartiteState& phi, const SpectralSplit& split, const Transformation& t) {
  return conjugate_map(split, transpose_map(phi, t));
}

// ---------------------------------------------------------------- GnsSpace

GnsSpace::GnsSpace(BipartiteState phi) : phi_(std::move(phi)), split_(spectral_split(phi_)) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(split_.gram_abs);
  const RVector ev = es.eigenvalues();
  if (ev.minCoeff() <= tol::kEigenvalue)
    throw DegenerateSplit("GnsSpace: scalar product is not strictly positive");
  const RMatrix& v = es.eigenvectors();
  sqrt_gram_ = v * ev.cwiseSqrt().asDiagonal() * v.transpose();
  inv_sqrt_gram_ = v * ev.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
}

double GnsSpace::min_gram_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(gram(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

int GnsSpace::quotient_dimension() const {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(gram(), Eigen::EigenvaluesOnly);
  return static_cast<int>((es.eigenvalues().array() > tol::kEigenvalue).count());
}

CVector GnsSpace::vector_of(const Transformation& t) const {
  return transpose_map(phi_, t).effect().coords().cast<Complex>();
}

CVector GnsSpace::to_orthonormal(const CVector& u) const { return sqrt_gram_.cast<Complex>() * u; }

// ---------------------------------------------------------------- scalar product

Complex scalar_product(const GnsSpace& space, const CVector& b, const CVector& a) {
  return b.dot(space.gram().cast<Complex>() * a);  // dot() conjugates its receiver
}

Complex scalar_product(const GnsSpace& space, const Effect& b, const Effect& a) {
  require_same_backend(space.theory(), b.theory(), "scalar_product");
  require_same_backend(space.theory(), a.theory(), "scalar_product");
  return scalar_product(space, CVector(b.coords().cast<Complex>()), CVector(a.coords().cast<Complex>()));
}

Complex scalar_product(const GnsSpace& space, const Transformation& b, const Transformation& a) {
  const Effect bt = transpose_map(space.phi(), b).effect();
  const Effect at = transpose_map(space.phi(), a).effect();
  return bilinear_form(space.phi(), bt, sigma(space.split(), at));
}

double adjoint_form(const GnsSpace& space, const Transformation& b, const Transformation& a) {
  const Transformation ad = adjoint_map(space.phi(), space.split(), a);
  return bilinear_form(space.phi(), Effect::unit(space.theory()), compose(ad, b).effect());
}

// ---------------------------------------------------------------- representation

GnsOperator gns_rep(const GnsSpace& space, const Transformation& t) {
  const RMatrix h = transpose_map(space.phi(), t).heisenberg();
  const RMatrix m = space.sqrt_gram() * h * space.inv_sqrt_gram();
  return {m.cast<Complex>(), t};
}

double phi_norm(const GnsSpace& space, const Transformation& t) {
  const CMatrix m = gns_rep(space, t).matrix;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

std::pair<double, double> cstar_check(const GnsSpace& space, const Transformation& t) {
  const Transformation ad = adjoint_map(space.phi(), space.split(), t);
  const double norm = phi_norm(space, t);
  return {phi_norm(space, compose(ad, t)), norm * norm};
}

CVector state_rep(const GnsSpace& space, const State& omega) {
  const PreparationWitness w = prepare_witness(space.phi(), omega);
  const Effect t = w.map.effect();
  const double p = bilinear_form(space.phi(), t, Effect::unit(space.theory()));
  // omega(A) = Phi(T, A) / p = |Phi|(A, sigma T) / p.
  const Effect st(space.theory(), space.split().sigma() * t.coords(), true);
  return st.coords().cast<Complex>() / p;
}

double born_pair(const GnsSpace& space, const State& omega, const Effect& a) {
  return scalar_product(space, CVector(a.coords().cast<Complex>()), state_rep(space, omega)).real();
}

double born_three_term(const GnsSpace& space, const State& omega, const Effect& b, const Transformation& a) {
  const CMatrix pi_a = gns_rep(space, conjugate_map(space.split(), a)).matrix;
  const CVector v = space.to_orthonormal(state_rep(space, omega));
  const CVector bra = space.to_orthonormal(b.coords().cast<Complex>());
  return bra.dot(pi_a * v).real();
}

}  // namespace gpt
