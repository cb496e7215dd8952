#pragma once

// Dense linear-algebra vocabulary shared by every module. All matrices are
// small (joint dimension <= 25), so everything is plain dynamic Eigen.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gpt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds. Probability and norm comparisons are absolute;
/// rank decisions are relative to the largest singular value.
namespace tol {
inline constexpr double kProbability = 1e-9;
inline constexpr double kEigenvalue = 1e-12;
inline constexpr double kRankRelative = 1e-10;
inline constexpr double kResidual = 1e-10;
}  // namespace tol

inline constexpr Complex kI{0.0, 1.0};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Partial trace of an operator on C^{dA} (x) C^{dB}. `keep` selects the
/// surviving factor: 1 keeps A (traces out B), 2 keeps B.
CMatrix partial_trace(const CMatrix& m, int dA, int dB, int keep);

/// Swap operator on C^d (x) C^d.
CMatrix swap_operator(int d);

bool is_hermitian(const CMatrix& m, double tolerance);
CMatrix hermitian_part(const CMatrix& m);

/// Ascending eigenvalues of a Hermitian matrix (the Hermitian part is used).
RVector eigenvalues_hermitian(const CMatrix& m);

double trace_norm(const CMatrix& hermitian);
double spectral_norm_hermitian(const CMatrix& hermitian);

/// Square root of a positive semidefinite matrix; negative eigenvalues within
/// round-off are clipped to zero.
CMatrix sqrt_psd(const CMatrix& m);

/// Positive and negative parts H = P - N with P, N >= 0 and P N = 0.
std::pair<CMatrix, CMatrix> jordan_split(const CMatrix& hermitian);

/// Number of singular values above `relative * sigma_max`.
int numerical_rank(const RMatrix& m, double relative = tol::kRankRelative);
std::vector<double> singular_values(const RMatrix& m);

/// Isometric real coordinates of a Hermitian D x D matrix (length D^2):
/// diagonal entries, then sqrt(2) Re and sqrt(2) Im of the strict upper
/// triangle, row-major. Frobenius inner products are preserved.
RVector hermitian_to_real(const CMatrix& h);
CMatrix real_to_hermitian(const RVector& v, int dim);

}  // namespace gpt
