#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gpt/linalg.hpp"

namespace gpt {

enum class Backend { quantum, classical };

std::string to_string(Backend b);

/// A finite-dimensional backend: fixes the real space of generalized effects
/// through an orthonormal (Hilbert-Schmidt) basis of Hermitian d x d matrices.
///
/// Quantum: the normalized identity followed by the generalized Gell-Mann
/// matrices (symmetric and antisymmetric pairs for j < k, then diagonals),
/// all scaled to Tr[B_i B_j] = delta_ij. n = d^2.
///
/// Classical: the diagonal projectors |i><i|. n = d. This is the
/// diagonal-matrix restriction of the quantum backend.
///
/// Cheap to copy; the basis is shared and immutable.
class Theory {
 public:
  static Theory quantum(int d);
  static Theory classical(int d);

  Backend backend() const { return backend_; }
  int d() const { return d_; }
  /// Dimension of the generalized-effect space.
  int dim() const { return static_cast<int>(basis_->size()); }
  const CMatrix& basis(int i) const { return (*basis_)[static_cast<std::size_t>(i)]; }
  const std::vector<CMatrix>& basis() const { return *basis_; }

  /// Coordinates Tr[B_i H] of a Hermitian matrix (orthogonal projection onto
  /// the span for the classical backend).
  RVector coords(const CMatrix& h) const;
  /// Complex coordinates of an arbitrary matrix.
  CVector complex_coords(const CMatrix& m) const;
  CMatrix matrix(const RVector& coords) const;
  CMatrix matrix(const CVector& coords) const;
  /// Coordinates of the identity matrix (the unit effect).
  RVector unit() const { return coords(CMatrix::Identity(d_, d_)); }

  bool operator==(const Theory& other) const {
    return backend_ == other.backend_ && d_ == other.d_;
  }

  std::string describe() const;

 private:
  Theory(Backend b, int d, std::shared_ptr<const std::vector<CMatrix>> basis)
      : backend_(b), d_(d), basis_(std::move(basis)) {}

  Backend backend_;
  int d_;
  std::shared_ptr<const std::vector<CMatrix>> basis_;
};

/// Orthonormal generalized Gell-Mann basis, identity first.
std::vector<CMatrix> gell_mann_basis(int d);

void require_same_backend(const Theory& a, const Theory& b, const char* where);

}  // namespace gpt
