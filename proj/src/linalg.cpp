#include "gpt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpt {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace(const CMatrix& m, int dA, int dB, int keep) {
  if (m.rows() != dA * dB || m.cols() != dA * dB)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (keep == 1) {
    CMatrix out = CMatrix::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
      for (int b = 0; b < dA; ++b)
        out(a, b) = m.block(a * dB, b * dB, dB, dB).trace();
    return out;
  }
  if (keep == 2) {
    CMatrix out = CMatrix::Zero(dB, dB);
    for (int a = 0; a < dA; ++a) out += m.block(a * dB, a * dB, dB, dB);
    return out;
  }
  throw std::invalid_argument("partial_trace: keep must be 1 or 2");
}

CMatrix swap_operator(int d) {
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

bool is_hermitian(const CMatrix& m, double tolerance) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

RVector eigenvalues_hermitian(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double trace_norm(const CMatrix& hermitian) {
  return eigenvalues_hermitian(hermitian).cwiseAbs().sum();
}

double spectral_norm_hermitian(const CMatrix& hermitian) {
  return eigenvalues_hermitian(hermitian).cwiseAbs().maxCoeff();
}

CMatrix sqrt_psd(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  RVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

std::pair<CMatrix, CMatrix> jordan_split(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(hermitian));
  const RVector& ev = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  RVector pos = ev.cwiseMax(0.0);
  RVector neg = (-ev).cwiseMax(0.0);
  return {v * pos.cast<Complex>().asDiagonal() * v.adjoint(),
          v * neg.cast<Complex>().asDiagonal() * v.adjoint()};
}

std::vector<double> singular_values(const RMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::BDCSVD<RMatrix> svd(m);
  const RVector& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

int numerical_rank(const RMatrix& m, double relative) {
  auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cutoff = relative * s.front();
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > cutoff; }));
}

RVector hermitian_to_real(const CMatrix& h) {
  const auto d = h.rows();
  RVector v(d * d);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) v(k++) = h(i, i).real();
  const double r2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      v(k++) = r2 * h(i, j).real();
      v(k++) = r2 * h(i, j).imag();
    }
  return v;
}

CMatrix real_to_hermitian(const RVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw std::invalid_argument("real_to_hermitian: length mismatch");
  CMatrix h = CMatrix::Zero(dim, dim);
  Eigen::Index k = 0;
  for (int i = 0; i < dim; ++i) h(i, i) = v(k++);
  const double r2 = std::sqrt(2.0);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Complex z(v(k) / r2, v(k + 1) / r2);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

}  // namespace gpt
