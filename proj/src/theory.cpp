#include "gpt/theory.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gpt/errors.hpp"

namespace gpt {

std::string to_string(Backend b) { return b == Backend::quantum ? "quantum" : "classical"; }

std::vector<CMatrix> gell_mann_basis(int d) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  out.push_back(CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double r2 = std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix s = CMatrix::Zero(d, d);
      s(j, k) = s(k, j) = 1.0 / r2;
      out.push_back(s);
      CMatrix a = CMatrix::Zero(d, d);
      a(j, k) = -kI / r2;
      a(k, j) = kI / r2;
      out.push_back(a);
    }
  for (int l = 1; l < d; ++l) {
    CMatrix g = CMatrix::Zero(d, d);
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) g(j, j) = c;
    g(l, l) = -l * c;
    out.push_back(g);
  }
  return out;
}

namespace {

std::shared_ptr<const std::vector<CMatrix>> cached_basis(Backend b, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<CMatrix>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(b), d);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<CMatrix> basis;
  if (b == Backend::quantum) {
    basis = gell_mann_basis(d);
  } else {
    for (int i = 0; i < d; ++i) {
      CMatrix p = CMatrix::Zero(d, d);
      p(i, i) = 1.0;
      basis.push_back(p);
    }
  }
  auto ptr = std::make_shared<const std::vector<CMatrix>>(std::move(basis));
  cache.emplace(key, ptr);
  return ptr;
}

}  // namespace

Theory Theory::quantum(int d) {
  if (d < 1) throw std::invalid_argument("Theory: dimension must be positive");
  return Theory(Backend::quantum, d, cached_basis(Backend::quantum, d));
}

Theory Theory::classical(int d) {
  if (d < 1) throw std::invalid_argument("Theory: dimension must be positive");
  return Theory(Backend::classical, d, cached_basis(Backend::classical, d));
}

RVector Theory::coords(const CMatrix& h) const {
  if (h.rows() != d_ || h.cols() != d_) throw DimensionMismatch("Theory::coords: wrong matrix size");
  RVector c(dim());
  // Tr[B h] = sum_ij B_ij h_ji; B is Hermitian so this is <B, h>_F.
  for (int i = 0; i < dim(); ++i) c(i) = (basis(i).conjugate().cwiseProduct(h)).sum().real();
  return c;
}

CVector Theory::complex_coords(const CMatrix& m) const {
  if (m.rows() != d_ || m.cols() != d_)
    throw DimensionMismatch("Theory::complex_coords: wrong matrix size");
  CVector c(dim());
  for (int i = 0; i < dim(); ++i) c(i) = (basis(i).conjugate().cwiseProduct(m)).sum();
  return c;
}

CMatrix Theory::matrix(const RVector& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("Theory::matrix: wrong coordinate length");
  CMatrix m = CMatrix::Zero(d_, d_);
  for (int i = 0; i < dim(); ++i) m += coords(i) * basis(i);
  return m;
}

CMatrix Theory::matrix(const CVector& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("Theory::matrix: wrong coordinate length");
  CMatrix m = CMatrix::Zero(d_, d_);
  for (int i = 0; i < dim(); ++i) m += coords(i) * basis(i);
  return m;
}

std::string Theory::describe() const { return to_string(backend_) + "(d=" + std::to_string(d_) + ")"; }

void require_same_backend(const Theory& a, const Theory& b, const char* where) {
  if (!(a == b))
    throw BackendMismatch(std::string(where) + ": " + a.describe() + " vs " + b.describe());
}

}  // namespace gpt
