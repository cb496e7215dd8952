#pragma once

// Quantum and classical backends: density matrices, CP maps in Choi form,
// bipartite states with local-state extraction and local action, and the
// seeded samplers used by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "gpt/core.hpp"

namespace gpt {

/// Hermitian, positive semidefinite, unit trace (all within 1e-12).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix rho);
  const CMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  State state() const;

 private:
  CMatrix rho_;
};

/// Choi matrix sum_ab |a><b| (x) M(|a><b|); input factor first.
struct ChoiMap {
  CMatrix matrix;
  int d = 0;
};

ChoiMap kraus_to_choi(const std::vector<CMatrix>& kraus);
/// Positive semidefinite and Tr_out C <= I, both within 1e-12.
bool cp_check(const ChoiMap& c);

/// Joint state of two identical systems of dimension d.
class BipartiteState {
 public:
  BipartiteState(CMatrix rho, int d);
  const CMatrix& matrix() const { return rho_.matrix(); }
  int d() const { return d_; }
  /// The joint system as a State of the quantum theory of dimension d^2.
  State state() const { return rho_.state(); }

 private:
  DensityMatrix rho_;
  int d_;
};

BipartiteState max_entangled(int d);
BipartiteState product_state(const CMatrix& rho1, const CMatrix& rho2);

/// Omega|_n: the reduced state of slot n (1 or 2).
State local_state(const BipartiteState& joint, int slot);
/// Reduced state of an arbitrary joint weight on C^d (x) C^d.
Weight local_weight(const Weight& joint, int d, int slot);

/// (A (x) I) Omega or (I (x) A) Omega as an unnormalized weight on the joint system.
Weight apply_local(const Weight& joint, const Transformation& t, int slot);
Weight apply_local(const BipartiteState& joint, const Transformation& t, int slot);

/// True iff the slot-2 local state after S(A) on slot 1 equals Omega|_2
/// within 1e-9. Completeness of `exp` is enforced by Experiment itself.
bool no_signaling_check(const BipartiteState& joint, const Experiment& exp);

/// Trace distance (1/2)||a - b||_1.
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Seeded samplers. Distributions:
///   random_state:  Hilbert-Schmidt measure (G G^dag / Tr, G complex Ginibre d x d);
///                  classical: uniform on the simplex (normalized Exp(1) draws).
///   random_pure:   Haar, first column of Q from the QR of a Ginibre matrix.
///   random_effect: U diag(u) U^dag, U Haar, u_i ~ U[0,1]; classical: diag(u).
///   random_cp:     Wishart Choi W = G G^dag (G Ginibre d^2 x d^2) rescaled so
///                  lambda_max(Tr_out W) = s, s ~ U(0,1]; classical: column-
///                  substochastic matrix with max column sum s.
///   random_generalized: a - b with a, b independent random_cp.
/// A Sampler owns its generator and must not be shared between threads.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform();
  CMatrix ginibre(int rows, int cols);
  CMatrix haar_unitary(int d);
  CVector random_pure(int d);
  CMatrix random_density(int d);

  State random_state(const Theory& theory);
  Effect random_effect(const Theory& theory);
  Transformation random_cp(const Theory& theory);
  Transformation random_generalized(const Theory& theory);
  Effect random_generalized_effect(const Theory& theory);
  BipartiteState random_bipartite(int d);

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace gpt
