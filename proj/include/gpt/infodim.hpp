#pragma once

// Informational completeness, predictability, informational dimension and
// the dimensionality identities relating states, effects and transformations
// of single and composite systems.

#include <string>
#include <vector>

#include "gpt/core.hpp"
#include "gpt/quantum.hpp"

namespace gpt {

// Standard observables ---------------------------------------------------

/// Qubit SIC POVM: (I + n.sigma)/4 over the tetrahedron vertices.
Observable tetrahedron_povm();
/// Qubit six-outcome Pauli observable: (I +- sigma_a)/6.
Observable pauli6_povm();
/// Projective measurement in the computational basis.
Observable projective_povm(const Theory& theory);
/// A minimal IC POVM for any d: l_k = S^{-1/2} P_k S^{-1/2} with P_k the
/// projectors onto the spanning pure states and S = sum_k P_k.
Observable minimal_ic_povm(int d);

// Informational completeness ---------------------------------------------

int ic_rank(const Observable& obs);
bool is_informationally_complete(const Observable& obs);
bool is_minimal_ic(const Observable& obs);
/// Coefficients c_i with sum_i c_i l_i = e (minimum-norm when not minimal).
/// Throws NotIC.
RVector ic_expand(const Effect& e, const Observable& obs);

/// max eigenvalue 1 and min eigenvalue 0, within 1e-9.
bool is_predictable(const Effect& e);
/// The eigenvalue-1 eigenspace is one-dimensional.
bool is_resolved(const Effect& e);

// Informational dimension ------------------------------------------------

struct IdimCertificate {
  int idim = 0;
  /// Witness: computational-basis states discriminated by the projective observable.
  int witness_size = 0;
  bool discriminates = false;      // omega_m(l_n) == delta_nm
  bool predictable_resolved = false;
  /// Rank of the witnesses' overlap Gram matrix Tr[rho_m rho_n].
  int gram_rank = 0;
  /// Perfectly discriminable states have mutually orthogonal supports inside
  /// the support of the unit effect, so their number is bounded by its rank.
  int upper_bound = 0;
};

IdimCertificate informational_dimension_certificate(const Theory& theory);
/// Throws InvariantViolation when witness and upper bound disagree.
int informational_dimension(const Theory& theory);

/// Affine dimension of a finite set of states (rank of differences).
int affine_dimension(const std::vector<State>& states);

// Composite systems ------------------------------------------------------

/// Products l_i (x) m_j span the bipartite generalized-effect space.
bool check_local_observability(const Observable& first, const Observable& second);
/// Same check with minimal_ic_povm on both factors.
bool check_local_observability(int d1, int d2);
int local_product_rank(const Observable& first, const Observable& second);

/// Bell basis (X^k Z^l (x) I)|Omega>, k,l = 0..d-1, as joint effects.
std::vector<CMatrix> bell_projectors(int d);
/// Default ancilla preparation for the Bell construction: a pure state all
/// of whose Weyl components are nonzero (the tetrahedral state for d = 2).
CMatrix default_bell_ancilla(int d);

struct BellIcReport {
  int rank = 0;
  int outcomes = 0;
  bool minimal_ic = false;
  bool bell_discriminating = false;
  int adm = 0;         // adm(S)
  int idim_joint = 0;  // idim(S x S)
  bool d4_holds = false;
  bool pass() const { return minimal_ic && bell_discriminating && d4_holds; }
};

/// Marginalizes the Bell observable on system + ancilla against `ancilla`
/// and checks the induced system observable is minimal IC. Throws
/// DimensionMismatch for an ancilla of the wrong dimension.
BellIcReport bell_ic_report(int d, const CMatrix& ancilla);
bool check_bell_ic(int d);

// Dimensionality identities ----------------------------------------------

struct IdentityRow {
  std::string name;
  std::string formula;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};

struct DimReport {
  int adm_s = 0;
  int idim_s = 0;
  int dim_pr = 0;
  std::vector<IdentityRow> rows;

  bool all_pass() const;
  /// Throws std::out_of_range for an unknown row name.
  const IdentityRow& row(const std::string& name) const;
};

/// Measures every dimension from sampled states, effects and maps (SVD
/// rank) and evaluates both sides of the rows D2, D3, D4, D34, D34',
/// tensor, T and P. System S has dimension d1; D3 pairs it with d2.
DimReport dim_identities(Backend backend, int d1, int d2, Sampler& sampler);

}  // namespace gpt
