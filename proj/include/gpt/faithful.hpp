#pragma once

// Faithfulness of bipartite states and the bilinear-form machinery built on
// a faithful state: the Gram matrix in the canonical Hermitian basis, its
// spectral split into positive and negative parts, the absolute value |Phi|
// and the involution sigma = P+ - P-.

#include "gpt/core.hpp"
#include "gpt/quantum.hpp"

namespace gpt {

bool is_symmetric(const BipartiteState& phi);

/// Real matrix of A -> (A (x) I) Phi (slot 1) or (I (x) A) Phi (slot 2) on
/// generalized transformations of dimension d. Column i*n + j is the image
/// of the basis map X -> Tr[B_j X] B_i; rows are hermitian_to_real
/// coordinates of the joint weight.
RMatrix local_action_matrix(const BipartiteState& phi, int slot);

/// Rank of the slot-1 local action map (d^4 when faithful).
int dynamical_rank(const BipartiteState& phi);
bool is_dynamically_faithful(const BipartiteState& phi);

struct PreparationWitness {
  Transformation map;
  double probability;
};

/// A physical transformation on slot 1 whose occurrence leaves slot 2 in
/// `target`. Throws NotFaithful when no physical witness exists.
PreparationWitness prepare_witness(const BipartiteState& phi, const State& target);

/// Dynamically faithful, and the inverse of the local action sends every
/// joint state to (a multiple of) a CP map: checked as complete positivity
/// of Omega -> Choi(L^{-1}(Omega)), a sufficient condition that is exact for
/// pure Phi of full Schmidt rank.
bool is_preparationally_faithful(const BipartiteState& phi);

/// Phi(A, B) = Tr[(A (x) B) Phi].
double bilinear_form(const BipartiteState& phi, const Effect& a, const Effect& b);
/// Gram matrix Phi(B_i, B_j) in the canonical basis.
RMatrix bilinear_gram(const BipartiteState& phi);

struct SpectralSplit {
  Theory theory;
  RMatrix p_plus;
  RMatrix p_minus;
  int n_plus = 0;
  int n_minus = 0;
  RVector eigenvalues;  // of the Gram matrix, ascending
  RMatrix gram;
  RMatrix gram_abs;

  /// P+ - P- on effect coordinates.
  RMatrix sigma() const { return p_plus - p_minus; }
};

/// Throws NotSymmetric for a non-symmetric Gram matrix and DegenerateSplit
/// when an eigenvalue lies within 1e-12 of zero.
SpectralSplit spectral_split(const BipartiteState& phi);

/// Throws ConeViolation when a physical effect is mapped outside [0, I].
Effect sigma(const SpectralSplit& split, const Effect& e);
/// omega^sigma(A) = omega(sigma(A)). Throws ConeViolation for a non-state result.
State state_sigma(const SpectralSplit& split, const State& omega);

}  // namespace gpt
