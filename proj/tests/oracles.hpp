#pragma once

// Independent reference computations for the test suites. Everything here
// works directly on density matrices and Kraus operators with explicit
// index loops; none of it goes through the library's coordinate machinery.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline M pauli_x() { M m(2, 2); m << 0, 1, 1, 0; return m; }
inline M pauli_y() { M m(2, 2); m << 0, C(0, -1), C(0, 1), 0; return m; }
inline M pauli_z() { M m(2, 2); m << 1, 0, 0, -1; return m; }

inline M ket_bra(int d, int i, int j) {
  M m = M::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

inline M apply_kraus(const std::vector<M>& kraus, const M& rho) {
  M out = M::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

inline M apply_kraus_dual(const std::vector<M>& kraus, const M& e) {
  M out = M::Zero(e.rows(), e.cols());
  for (const auto& k : kraus) out += k.adjoint() * e * k;
  return out;
}

inline C trace_of_product(const M& a, const M& b) {
  C s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
  return s;
}

/// Element-wise partial trace over C^d (x) C^d; keep = 1 or 2.
inline M partial_trace_loops(const M& m, int d, int keep) {
  M out = M::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j) += keep == 1 ? m(i * d + k, j * d + k) : m(k * d + i, k * d + j);
  return out;
}

inline M kron_loops(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline M max_entangled(int d) {
  V v = V::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return v * v.adjoint();
}

/// (K (x) I) rho (K (x) I)^dag summed over Kraus operators, on slot 1 or 2.
inline M apply_kraus_local(const std::vector<M>& kraus, const M& rho, int d, int slot) {
  M id = M::Identity(d, d);
  M out = M::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus) {
    M big = slot == 1 ? kron_loops(k, id) : kron_loops(id, k);
    out += big * rho * big.adjoint();
  }
  return out;
}

inline double trace_norm(const M& h) {
  Eigen::SelfAdjointEigenSolver<M> es(0.5 * (h + h.adjoint()));
  return es.eigenvalues().cwiseAbs().sum();
}

/// max over a dense Bloch-sphere grid of ||M(psi psi^dag)||_1 for a qubit map
/// given as a function. Used as an independent check of the refined norm.
template <class Map>
double qubit_norm_grid(const Map& map, int n_theta = 181, int n_phi = 360) {
  double best = 0.0;
  for (int i = 0; i <= n_theta; ++i)
    for (int j = 0; j < n_phi; ++j) {
      const double th = std::numbers::pi * i / n_theta;
      const double ph = 2.0 * std::numbers::pi * j / n_phi;
      V psi(2);
      psi << std::cos(th / 2), std::polar(std::sin(th / 2), ph);
      best = std::max(best, trace_norm(map(M(psi * psi.adjoint()))));
    }
  return best;
}

}  // namespace oracle
