#include "gpt/infodim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gpt {

namespace {

RMatrix coords_matrix(const Observable& obs) {
  RMatrix m(obs.theory().dim(), static_cast<Eigen::Index>(obs.size()));
  for (std::size_t i = 0; i < obs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = obs.effects()[i].coords();
  return m;
}

Theory make_theory(Backend b, int d) { return b == Backend::quantum ? Theory::quantum(d) : Theory::classical(d); }

CMatrix pauli(int which) {
  CMatrix p = CMatrix::Zero(2, 2);
  switch (which) {
    case 0: p << 0, 1, 1, 0; break;
    case 1: p << 0, -kI, kI, 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

}  // namespace

Observable tetrahedron_povm() {
  const Theory q = Theory::quantum(2);
  const double s = 1.0 / std::sqrt(3.0);
  const double n[4][3] = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  std::vector<Effect> effects;
  for (const auto& v : n) {
    CMatrix m = CMatrix::Identity(2, 2);
    for (int a = 0; a < 3; ++a) m += v[a] * pauli(a);
    effects.push_back(Effect::from_matrix(q, m / 4.0));
  }
  return Observable(std::move(effects));
}

Observable pauli6_povm() {
  const Theory q = Theory::quantum(2);
  std::vector<Effect> effects;
  for (int a = 0; a < 3; ++a)
    for (double sign : {1.0, -1.0})
      effects.push_back(Effect::from_matrix(q, (CMatrix::Identity(2, 2) + sign * pauli(a)) / 6.0));
  return Observable(std::move(effects));
}

Observable projective_povm(const Theory& theory) {
  std::vector<Effect> effects;
  for (int i = 0; i < theory.d(); ++i) {
    CMatrix p = CMatrix::Zero(theory.d(), theory.d());
    p(i, i) = 1.0;
    effects.push_back(Effect::from_matrix(theory, p));
  }
  return Observable(std::move(effects));
}

Observable minimal_ic_povm(int d) {
  const Theory q = Theory::quantum(d);
  std::vector<CMatrix> projectors;
  CMatrix total = CMatrix::Zero(d, d);
  for (const auto& s : spanning_states(q)) {
    projectors.push_back(s.matrix());
    total += projectors.back();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(total);
  const RVector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
  const CMatrix t = es.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  std::vector<Effect> effects;
  for (const auto& p : projectors) effects.push_back(Effect::from_matrix(q, hermitian_part(t * p * t)));
  return Observable(std::move(effects));
}

int ic_rank(const Observable& obs) { return numerical_rank(coords_matrix(obs)); }

bool is_informationally_complete(const Observable& obs) { return ic_rank(obs) == obs.theory().dim(); }

bool is_minimal_ic(const Observable& obs) {
  return is_informationally_complete(obs) && static_cast<int>(obs.size()) == obs.theory().dim();
}

RVector ic_expand(const Effect& e, const Observable& obs) {
  require_same_backend(e.theory(), obs.theory(), "ic_expand");
  if (!is_informationally_complete(obs)) throw NotIC("ic_expand: observable is not informationally complete");
  const RMatrix m = coords_matrix(obs);
  Eigen::CompleteOrthogonalDecomposition<RMatrix> cod(m);
  RVector c = cod.solve(e.coords());
  if ((m * c - e.coords()).norm() > tol::kProbability)
    throw NotIC("ic_expand: reconstruction residual above tolerance");
  return c;
}

bool is_predictable(const Effect& e) {
  const RVector ev = eigenvalues_hermitian(e.matrix());
  return std::abs(ev.maxCoeff() - 1.0) <= tol::kProbability && std::abs(ev.minCoeff()) <= tol::kProbability;
}

bool is_resolved(const Effect& e) {
  const RVector ev = eigenvalues_hermitian(e.matrix());
  int ones = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i) - 1.0) <= tol::kProbability) ++ones;
  return ones == 1;
}

IdimCertificate informational_dimension_certificate(const Theory& theory) {
  const int d = theory.d();
  IdimCertificate cert;
  const Observable obs = projective_povm(theory);
  std::vector<State> witness;
  for (int i = 0; i < d; ++i) {
    CMatrix p = CMatrix::Zero(d, d);
    p(i, i) = 1.0;
    witness.push_back(State::from_matrix(theory, p));
  }
  cert.witness_size = d;
  cert.discriminates = true;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const double expected = (m == n) ? 1.0 : 0.0;
      if (std::abs(pair(witness[static_cast<std::size_t>(m)], obs.effects()[static_cast<std::size_t>(n)]) - expected) >
          tol::kProbability)
        cert.discriminates = false;
    }
  cert.predictable_resolved = true;
  for (const auto& e : obs.effects())
    cert.predictable_resolved = cert.predictable_resolved && is_predictable(e) && is_resolved(e);

  RMatrix gram(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      gram(m, n) = (witness[static_cast<std::size_t>(m)].matrix() * witness[static_cast<std::size_t>(n)].matrix())
                       .trace()
                       .real();
  cert.gram_rank = numerical_rank(gram);
  const RVector unit_spectrum = eigenvalues_hermitian(Effect::unit(theory).matrix());
  cert.upper_bound = static_cast<int>((unit_spectrum.array() > tol::kEigenvalue).count());
  const bool ok = cert.discriminates && cert.predictable_resolved && cert.gram_rank == cert.witness_size;
  cert.idim = ok ? cert.witness_size : 0;
  return cert;
}

int informational_dimension(const Theory& theory) {
  const auto cert = informational_dimension_certificate(theory);
  if (cert.idim == 0 || cert.idim != cert.upper_bound)
    throw InvariantViolation("informational_dimension: witness (" + std::to_string(cert.witness_size) +
                             ") and upper bound (" + std::to_string(cert.upper_bound) + ") disagree");
  return cert.idim;
}

int affine_dimension(const std::vector<State>& states) {
  if (states.size() < 2) return 0;
  const auto& base = states.front().coords();
  RMatrix diff(base.size(), static_cast<Eigen::Index>(states.size() - 1));
  for (std::size_t k = 1; k < states.size(); ++k) diff.col(static_cast<Eigen::Index>(k - 1)) = states[k].coords() - base;
  return numerical_rank(diff);
}

int local_product_rank(const Observable& first, const Observable& second) {
  if (first.theory().backend() != second.theory().backend())
    throw BackendMismatch("local observability: factors on different backends");
  const int d1 = first.theory().d(), d2 = second.theory().d();
  const Theory joint = make_theory(first.theory().backend(), d1 * d2);
  RMatrix m(joint.dim(), static_cast<Eigen::Index>(first.size() * second.size()));
  Eigen::Index col = 0;
  for (const auto& a : first.effects())
    for (const auto& b : second.effects()) m.col(col++) = joint.coords(kron(a.matrix(), b.matrix()));
  return numerical_rank(m);
}

bool check_local_observability(const Observable& first, const Observable& second) {
  const int d1 = first.theory().d(), d2 = second.theory().d();
  const Theory joint = make_theory(first.theory().backend(), d1 * d2);
  return local_product_rank(first, second) == joint.dim();
}

bool check_local_observability(int d1, int d2) {
  return check_local_observability(minimal_ic_povm(d1), minimal_ic_povm(d2));
}

std::vector<CMatrix> bell_projectors(int d) {
  CMatrix shift = CMatrix::Zero(d, d), clock = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    shift((j + 1) % d, j) = 1.0;
    clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  }
  CVector omega = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<CMatrix> out;
  CMatrix xk = CMatrix::Identity(d, d);
  for (int k = 0; k < d; ++k) {
    CMatrix zl = CMatrix::Identity(d, d);
    for (int l = 0; l < d; ++l) {
      const CVector v = kron(xk * zl, CMatrix::Identity(d, d)) * omega;
      out.push_back(v * v.adjoint());
      zl = clock * zl;
    }
    xk = shift * xk;
  }
  return out;
}

CMatrix default_bell_ancilla(int d) {
  CVector psi(d);
  if (d == 2) {
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    psi << std::cos(theta / 2), std::polar(std::sin(theta / 2), std::numbers::pi / 4);
  } else {
    for (int j = 0; j < d; ++j) psi(j) = std::polar(1.0 + j, 0.7 * j * j + 0.3 * j);
    psi.normalize();
  }
  return psi * psi.adjoint();
}

BellIcReport bell_ic_report(int d, const CMatrix& ancilla) {
  if (ancilla.rows() != d || ancilla.cols() != d)
    throw DimensionMismatch("bell_ic: ancilla has dimension " + std::to_string(ancilla.rows()) + ", expected " +
                            std::to_string(d));
  const DensityMatrix sigma(ancilla);
  const Theory single = Theory::quantum(d);
  const auto bell = bell_projectors(d);

  BellIcReport r;
  std::vector<Effect> induced;
  const CMatrix lift = kron(CMatrix::Identity(d, d), sigma.matrix());
  for (const auto& b : bell)
    induced.push_back(Effect::from_matrix(single, hermitian_part(partial_trace(lift * b, d, d, 1))));
  const Observable obs(std::move(induced));
  r.outcomes = static_cast<int>(obs.size());
  r.rank = ic_rank(obs);
  r.minimal_ic = is_minimal_ic(obs);

  r.bell_discriminating = true;
  for (std::size_t m = 0; m < bell.size(); ++m)
    for (std::size_t n = 0; n < bell.size(); ++n) {
      const double p = (bell[m] * bell[n]).trace().real();
      if (std::abs(p - (m == n ? 1.0 : 0.0)) > tol::kProbability) r.bell_discriminating = false;
    }

  r.adm = affine_dimension(spanning_states(single));
  r.idim_joint = informational_dimension(Theory::quantum(d * d));
  r.d4_holds = (r.adm == r.idim_joint - 1);
  return r;
}

bool check_bell_ic(int d) { return bell_ic_report(d, default_bell_ancilla(d)).pass(); }

bool DimReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

const IdentityRow& DimReport::row(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw std::out_of_range("DimReport: no row " + name);
}

namespace {

int sampled_affine_dimension(const Theory& theory, Sampler& sampler) {
  std::vector<State> states;
  for (int k = 0; k < theory.dim() + 6; ++k) states.push_back(sampler.random_state(theory));
  return affine_dimension(states);
}

int sampled_effect_dimension(const Theory& theory, Sampler& sampler) {
  const int count = theory.dim() + 6;
  RMatrix m(theory.dim(), count);
  for (int k = 0; k < count; ++k) m.col(k) = sampler.random_effect(theory).coords();
  return numerical_rank(m);
}

int sampled_transformation_dimension(const Theory& theory, Sampler& sampler) {
  const int n = theory.d() * theory.d();
  const int count = n * n + 6;
  RMatrix m(n * n, count);
  for (int k = 0; k < count; ++k) m.col(k) = hermitian_to_real(sampler.random_cp(theory).choi());
  return numerical_rank(m);
}

IdentityRow make_row(std::string name, std::string formula, long lhs, long rhs) {
  return IdentityRow{std::move(name), std::move(formula), lhs, rhs, lhs == rhs};
}

}  // namespace

DimReport dim_identities(Backend backend, int d1, int d2, Sampler& sampler) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("dim_identities: dimensions must be at least 2");
  const Theory s1 = make_theory(backend, d1);
  const Theory s2 = make_theory(backend, d2);
  const Theory s12 = make_theory(backend, d1 * d2);
  const Theory sq = make_theory(backend, d1 * d1);

  DimReport rep;
  rep.adm_s = sampled_affine_dimension(s1, sampler);
  rep.dim_pr = sampled_effect_dimension(s1, sampler);
  rep.idim_s = informational_dimension(s1);
  const long adm2 = sampled_affine_dimension(s2, sampler);
  const long adm12 = sampled_affine_dimension(s12, sampler);
  const long adm_sq = sampled_affine_dimension(sq, sampler);
  const long idim_sq = informational_dimension(sq);
  const long adm_t = sampled_transformation_dimension(s1, sampler);
  const long a1 = rep.adm_s, i1 = rep.idim_s;

  rep.rows.push_back(make_row("D2", "dim(P_R) = adm(S) + 1", rep.dim_pr, a1 + 1));
  rep.rows.push_back(make_row("D3", "adm(S12) = adm(S1) adm(S2) + adm(S1) + adm(S2)", adm12, a1 * adm2 + a1 + adm2));
  rep.rows.push_back(make_row("D4", "adm(S) = idim(S^x2) - 1", a1, idim_sq - 1));
  rep.rows.push_back(make_row("D34", "adm(S^x2) = idim(S^x2)^2 - 1", adm_sq, idim_sq * idim_sq - 1));
  rep.rows.push_back(make_row("D34'", "adm(S) = idim(S)^2 - 1", a1, i1 * i1 - 1));
  rep.rows.push_back(make_row("tensor", "idim(S^x2) = idim(S)^2", idim_sq, i1 * i1));
  rep.rows.push_back(make_row("T", "adm(T) = adm(S^x2) + 1", adm_t, adm_sq + 1));
  rep.rows.push_back(make_row("P", "dim(P_R) = idim(S)^2", rep.dim_pr, i1 * i1));
  return rep;
}

}  // namespace gpt
