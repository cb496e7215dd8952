#pragma once

// Operational transpose, complex conjugation and adjoint of transformations
// over a faithful symmetric state Phi; the Phi scalar product on generalized
// effects; the GNS representation pi(A)|B> = |A o B>; the C*-identity and the
// Born rule written as a scalar product.
//
// Vector convention: the GNS vector |A> of a transformation A is the effect
// of its transpose A' (coordinates in the canonical Hermitian basis). Then
// pi(C) acts on vectors as the Heisenberg action of C', pi(A)|I> = |A>, and
// <B|A> = Phi(B', sigma(A')) = |Phi|(|B>, |A>).

#include <utility>

#include "gpt/faithful.hpp"

namespace gpt {

struct TransposeResult {
  Transformation map;
  /// ||(A (x) I) Phi - (I (x) A') Phi|| in Frobenius norm.
  double residual;
};

/// Solves (A (x) I) Phi = (I (x) A') Phi for the generalized A'. Throws
/// NotFaithful when the system is rank deficient or the residual exceeds 1e-10.
TransposeResult transpose_map_certified(const BipartiteState& phi, const Transformation& t);
Transformation transpose_map(const BipartiteState& phi, const Transformation& t);

/// Complex conjugation of the Choi matrix in the computational basis.
/// The split is accepted for interface symmetry; the extension does not depend on it.
Transformation conjugate_map(const SpectralSplit& split, const Transformation& t);
/// Whether the effect of conjugate_map(t) is sigma of the effect of t.
bool conjugation_consistent(const SpectralSplit& split, const Transformation& t);

/// A^dagger = sigma(A').
Transformation adjoint_map(const BipartiteState& phi, const SpectralSplit& split, const Transformation& t);

class GnsSpace {
 public:
  /// Throws NotSymmetric / DegenerateSplit from the spectral split.
  explicit GnsSpace(BipartiteState phi);

  const BipartiteState& phi() const { return phi_; }
  const SpectralSplit& split() const { return split_; }
  const Theory& theory() const { return split_.theory; }
  /// Gram matrix of the scalar product in effect coordinates (= |Phi| Gram).
  const RMatrix& gram() const { return split_.gram_abs; }
  int dim() const { return theory().dim(); }
  double min_gram_eigenvalue() const;
  /// dim of the quotient by the zero-norm ideal.
  int quotient_dimension() const;

  /// |A>: effect coordinates of A'.
  CVector vector_of(const Transformation& t) const;
  /// Orthonormal coordinates G^{1/2} u of an effect-coordinate vector.
  CVector to_orthonormal(const CVector& u) const;
  const RMatrix& sqrt_gram() const { return sqrt_gram_; }
  const RMatrix& inv_sqrt_gram() const { return inv_sqrt_gram_; }

 private:
  BipartiteState phi_;
  SpectralSplit split_;
  RMatrix sqrt_gram_;
  RMatrix inv_sqrt_gram_;
};

/// pi(A) in orthonormal coordinates; the matrix adjoint is the Hilbert adjoint.
struct GnsOperator {
  CMatrix matrix;
  Transformation source;
};

/// <b|a> on (complexified) effect coordinates: conjugate-linear in b.
Complex scalar_product(const GnsSpace& space, const CVector& b, const CVector& a);
Complex scalar_product(const GnsSpace& space, const Effect& b, const Effect& a);
/// <B|A> = Phi(B', sigma(A')) for transformations.
Complex scalar_product(const GnsSpace& space, const Transformation& b, const Transformation& a);
/// Phi|_2(A^dagger o B), the adjoint form of the same scalar product.
double adjoint_form(const GnsSpace& space, const Transformation& b, const Transformation& a);

GnsOperator gns_rep(const GnsSpace& space, const Transformation& t);
/// ||A||_Phi: largest singular value of pi(A).
double phi_norm(const GnsSpace& space, const Transformation& t);
/// (||A^dagger o A||_Phi, ||A||_Phi^2).
std::pair<double, double> cstar_check(const GnsSpace& space, const Transformation& t);

/// pi(omega) = sigma(T_omega) / Phi(T_omega, I) with T_omega the preparation
/// witness of omega, so that <a|pi(omega)> = Phi(T_omega, a) / Phi(T_omega, I).
/// For the maximally entangled state sigma is transposition and this is the
/// vector of the transposed witness.
CVector state_rep(const GnsSpace& space, const State& omega);
/// <pi(a)|pi(omega)>, equal to omega(a).
double born_pair(const GnsSpace& space, const State& omega, const Effect& a);
/// <B'|pi(A^sigma)|pi(omega)>, equal to omega(B o A).
double born_three_term(const GnsSpace& space, const State& omega, const Effect& b, const Transformation& a);

}  // namespace gpt
