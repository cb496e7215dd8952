#pragma once

// Backend-agnostic calculus of weights, states, effects, transformations and
// experiments. Every value is immutable after construction and carries the
// Theory it lives in; mixing theories raises BackendMismatch.
//
// Coordinates are always taken in the Theory's orthonormal Hermitian basis,
// so the pairing of a weight with an effect is a plain dot product.

#include <cstdint>
#include <utility>
#include <vector>

#include "gpt/errors.hpp"
#include "gpt/theory.hpp"

namespace gpt {

class State;

/// Nonnegative bounded functional on effects (generalized: any real
/// functional, i.e. a difference of weights).
class Weight {
 public:
  Weight(Theory theory, RVector coords, bool generalized = false);
  static Weight from_matrix(const Theory& theory, const CMatrix& m, bool generalized = false);

  const Theory& theory() const { return theory_; }
  const RVector& coords() const { return coords_; }
  bool generalized() const { return generalized_; }
  CMatrix matrix() const { return theory_.matrix(coords_); }
  /// Value on the unit effect.
  double total() const { return coords_.dot(theory_.unit()); }
  /// Throws ZeroProbability when total() is not above the probability cutoff.
  State normalize() const;

 private:
  Theory theory_;
  RVector coords_;
  bool generalized_;
};

/// A normalized weight. The quantum backend stores a density matrix in
/// Gell-Mann coordinates; the classical backend a probability vector.
class State : public Weight {
 public:
  State(Theory theory, RVector coords);
  static State from_matrix(const Theory& theory, const CMatrix& rho);
};

class Effect {
 public:
  Effect(Theory theory, RVector coords, bool generalized = false);
  static Effect from_matrix(const Theory& theory, const CMatrix& m, bool generalized = false);
  static Effect unit(const Theory& theory);

  const Theory& theory() const { return theory_; }
  const RVector& coords() const { return coords_; }
  bool generalized() const { return generalized_; }
  CMatrix matrix() const { return theory_.matrix(coords_); }

 private:
  Theory theory_;
  RVector coords_;
  bool generalized_;
};

/// A linear map on the state space. Stored as the real Schrodinger matrix S
/// acting on weight coordinates (column k holds the image of basis element
/// k); the effect-space (Heisenberg) action is its transpose. The Choi
/// matrix sum_ab |a><b| (x) M(|a><b|) is derived from S.
class Transformation {
 public:
  static Transformation from_kraus(const Theory& theory, const std::vector<CMatrix>& kraus);
  static Transformation from_choi(const Theory& theory, const CMatrix& choi, bool generalized = false);
  static Transformation from_schrodinger(const Theory& theory, RMatrix s, bool generalized = false);
  static Transformation identity(const Theory& theory);
  static Transformation zero(const Theory& theory);

  const Theory& theory() const { return theory_; }
  bool generalized() const { return generalized_; }
  const RMatrix& schrodinger() const { return s_; }
  /// Action on effect coordinates: evolve_effect(B, A).coords() == heisenberg() * B.coords().
  RMatrix heisenberg() const { return s_.transpose(); }
  const CMatrix& choi() const { return choi_; }

  /// The informational equivalence class (the effect) of this transformation.
  Effect effect() const;
  /// M(x) for an arbitrary complex d x d matrix.
  CMatrix apply(const CMatrix& x) const;
  /// M^dagger(e), the Heisenberg-picture image.
  CMatrix apply_dual(const CMatrix& e) const;

  Transformation as_generalized() const { return from_schrodinger(theory_, s_, true); }

 private:
  Transformation(Theory theory, RMatrix s, bool generalized);
  void validate_physical() const;

  Theory theory_;
  RMatrix s_;
  CMatrix choi_;
  bool generalized_;
};

/// Generalized-transformation algebra. Results are always flagged generalized.
Transformation operator+(const Transformation& a, const Transformation& b);
Transformation operator-(const Transformation& a, const Transformation& b);
Transformation operator*(double c, const Transformation& a);

/// States used to turn "for all states" into a finite check: the d^2 pure
/// states |i>, (|i>+|j>)/sqrt2 and (|i>+i|j>)/sqrt2 (quantum), or the d
/// vertices of the simplex (classical). They span the weight space.
std::vector<State> spanning_states(const Theory& theory);

/// A complete set of transformations: their effects sum to the unit effect.
class Experiment {
 public:
  /// Throws CompletenessError when the branch effects do not sum to the unit.
  explicit Experiment(std::vector<Transformation> branches);
  const std::vector<Transformation>& branches() const { return branches_; }
  const Theory& theory() const { return branches_.front().theory(); }
  /// The deterministic sum S(A) of all branches.
  Transformation deterministic() const;

 private:
  std::vector<Transformation> branches_;
};

/// A complete set of effects summing to the unit effect.
class Observable {
 public:
  explicit Observable(std::vector<Effect> effects);
  const std::vector<Effect>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  const Theory& theory() const { return effects_.front().theory(); }

 private:
  std::vector<Effect> effects_;
};

double pair(const Weight& w, const Effect& e);

/// (omega(A), omega_A). Throws ZeroProbability when omega(A) <= cutoff.
std::pair<double, State> condition(const State& state, const Transformation& t);
Weight act(const Transformation& t, const Weight& w);
/// Effect of B o A (A first, then B).
Effect evolve_effect(const Effect& b, const Transformation& a);
/// A o B: B acts first.
Transformation compose(const Transformation& a, const Transformation& b);

bool coexistent(const Transformation& a, const Transformation& b);
/// Physical sum; throws NotCoexistent.
Transformation add(const Transformation& a, const Transformation& b);
/// lambda in [0,1].
Transformation scale(double lambda, const Transformation& a);

bool informationally_equiv(const Transformation& a, const Transformation& b);
bool dynamically_equiv(const Transformation& a, const Transformation& b);

/// sup over states of |omega(E)|: the largest absolute eigenvalue.
double effect_norm(const Effect& e);
/// sup over the unit ball of generalized effects (-I <= E <= I) of |w(E)|.
/// This is the trace norm for both backends; for the classical simplex it is
/// the optimum of the LP over the hypercube vertices.
double weight_norm(const Weight& w);

struct NormOptions {
  /// Bloch-sphere grid (d = 2): theta x phi points.
  int grid_theta = 12;
  int grid_phi = 24;
  /// Haar-random starting points per unit of d (d > 2).
  int random_starts_per_dim = 48;
  int max_iterations = 200;
  double refine_tolerance = 1e-13;
  std::uint64_t seed = 0x6e6f726dULL;
};

struct NormEstimate {
  /// Certified: attained by an explicit pure state.
  double lower = 0.0;
  /// Certified: lambda_max(M+^dag(I) + M-^dag(I)) from the Jordan split of the Choi matrix.
  double upper = 0.0;
  int starts = 0;
  int iterations = 0;
  double value() const { return lower; }
  double gap() const { return upper - lower; }
};

/// Transformation norm sup_{B in ball} ||B o A|| = sup over states of the
/// trace norm of M(rho). Quantum: grid plus alternating-ascent refinement
/// over pure states. Classical: exact maximum over simplex vertices.
NormEstimate trans_norm(const Transformation& t, const NormOptions& options = {});

}  // namespace gpt
