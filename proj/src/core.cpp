#include "gpt/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gpt {

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Weight

Weight::Weight(Theory theory, RVector coords, bool generalized)
    : theory_(std::move(theory)), coords_(std::move(coords)), generalized_(generalized) {
  if (coords_.size() != theory_.dim()) throw DimensionMismatch("Weight: coordinate length mismatch");
  if (!generalized_) {
    const double lo = eigenvalues_hermitian(matrix()).minCoeff();
    if (lo < -tol::kProbability)
      throw InvariantViolation("Weight: negative eigenvalue " + fmt_double(lo));
  }
}

Weight Weight::from_matrix(const Theory& theory, const CMatrix& m, bool generalized) {
  return Weight(theory, theory.coords(m), generalized);
}

State Weight::normalize() const {
  const double t = total();
  if (t <= tol::kProbability)
    throw ZeroProbability("normalize: total weight " + fmt_double(t) + " is below the cutoff");
  if (generalized_) throw InvariantViolation("normalize: generalized weights have no normalized state");
  return State(theory_, coords_ / t);
}

State::State(Theory theory, RVector coords) : Weight(std::move(theory), std::move(coords), false) {
  if (std::abs(total() - 1.0) > tol::kProbability)
    throw InvariantViolation("State: trace " + fmt_double(total()) + " differs from 1");
}

State State::from_matrix(const Theory& theory, const CMatrix& rho) {
  if (!is_hermitian(rho, tol::kProbability)) throw InvariantViolation("State: matrix is not Hermitian");
  return State(theory, theory.coords(rho));
}

// ---------------------------------------------------------------- Effect

Effect::Effect(Theory theory, RVector coords, bool generalized)
    : theory_(std::move(theory)), coords_(std::move(coords)), generalized_(generalized) {
  if (coords_.size() != theory_.dim()) throw DimensionMismatch("Effect: coordinate length mismatch");
  if (!generalized_) {
    const RVector ev = eigenvalues_hermitian(matrix());
    if (ev.minCoeff() < -tol::kProbability || ev.maxCoeff() > 1.0 + tol::kProbability)
      throw InvariantViolation("Effect: spectrum [" + fmt_double(ev.minCoeff()) + ", " +
                               fmt_double(ev.maxCoeff()) + "] outside [0,1]");
  }
}

Effect Effect::from_matrix(const Theory& theory, const CMatrix& m, bool generalized) {
  if (!is_hermitian(m, tol::kProbability)) throw InvariantViolation("Effect: matrix is not Hermitian");
  return Effect(theory, theory.coords(m), generalized);
}

Effect Effect::unit(const Theory& theory) { return Effect(theory, theory.unit()); }

// ---------------------------------------------------------------- Transformation

Transformation::Transformation(Theory theory, RMatrix s, bool generalized)
    : theory_(std::move(theory)), s_(std::move(s)), generalized_(generalized) {
  const int n = theory_.dim();
  const int d = theory_.d();
  if (s_.rows() != n || s_.cols() != n) throw DimensionMismatch("Transformation: action matrix size");

  std::vector<CMatrix> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images.push_back(theory_.matrix(RVector(s_.col(k))));

  choi_ = CMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      CMatrix unit_ab = CMatrix::Zero(d, d);
      unit_ab(a, b) = 1.0;
      const CVector x = theory_.complex_coords(unit_ab);
      CMatrix block = CMatrix::Zero(d, d);
      for (int k = 0; k < n; ++k)
        if (x(k) != Complex(0.0)) block += x(k) * images[static_cast<std::size_t>(k)];
      choi_.block(a * d, b * d, d, d) = block;
    }
  if (!generalized_) validate_physical();
}

void Transformation::validate_physical() const {
  const double lo = eigenvalues_hermitian(choi_).minCoeff();
  if (lo < -tol::kProbability)
    throw InvariantViolation("Transformation: Choi matrix has eigenvalue " + fmt_double(lo));
  const int d = theory_.d();
  const double hi = eigenvalues_hermitian(partial_trace(choi_, d, d, 1)).maxCoeff();
  if (hi > 1.0 + tol::kProbability)
    throw InvariantViolation("Transformation: trace-increasing, lambda_max(M^dag(I)) = " + fmt_double(hi));
}

Transformation Transformation::from_schrodinger(const Theory& theory, RMatrix s, bool generalized) {
  return Transformation(theory, std::move(s), generalized);
}

Transformation Transformation::from_choi(const Theory& theory, const CMatrix& choi, bool generalized) {
  const int d = theory.d();
  const int n = theory.dim();
  if (choi.rows() != d * d || choi.cols() != d * d)
    throw DimensionMismatch("from_choi: expected a " + std::to_string(d * d) + "x" +
                            std::to_string(d * d) + " matrix");
  if (!is_hermitian(choi, tol::kProbability))
    throw InvariantViolation("from_choi: Choi matrix is not Hermitian");
  RMatrix s(n, n);
  for (int k = 0; k < n; ++k) {
    const CMatrix& bk = theory.basis(k);
    CMatrix image = CMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (bk(a, b) != Complex(0.0)) image += bk(a, b) * choi.block(a * d, b * d, d, d);
    s.col(k) = theory.coords(hermitian_part(image));
  }
  return Transformation(theory, std::move(s), generalized);
}

Transformation Transformation::from_kraus(const Theory& theory, const std::vector<CMatrix>& kraus) {
  const int d = theory.d();
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) throw DimensionMismatch("from_kraus: Kraus operator size");
    CVector v(d * d);
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < d; ++i) v(a * d + i) = k(i, a);
    choi += v * v.adjoint();
  }
  return from_choi(theory, choi, false);
}

Transformation Transformation::identity(const Theory& theory) {
  return Transformation(theory, RMatrix::Identity(theory.dim(), theory.dim()), false);
}

Transformation Transformation::zero(const Theory& theory) {
  return Transformation(theory, RMatrix::Zero(theory.dim(), theory.dim()), false);
}

Effect Transformation::effect() const {
  return Effect(theory_, heisenberg() * theory_.unit(), generalized_);
}

CMatrix Transformation::apply(const CMatrix& x) const {
  const int d = theory_.d();
  if (x.rows() != d || x.cols() != d) throw DimensionMismatch("Transformation::apply: matrix size");
  CMatrix out = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (x(a, b) != Complex(0.0)) out += x(a, b) * choi_.block(a * d, b * d, d, d);
  return out;
}

CMatrix Transformation::apply_dual(const CMatrix& e) const {
  const int d = theory_.d();
  if (e.rows() != d || e.cols() != d) throw DimensionMismatch("Transformation::apply_dual: matrix size");
  CMatrix out(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out(b, a) = (e * choi_.block(a * d, b * d, d, d)).trace();
  return out;
}

Transformation operator+(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "operator+");
  return Transformation::from_schrodinger(a.theory(), a.schrodinger() + b.schrodinger(), true);
}

Transformation operator-(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "operator-");
  return Transformation::from_schrodinger(a.theory(), a.schrodinger() - b.schrodinger(), true);
}

Transformation operator*(double c, const Transformation& a) {
  return Transformation::from_schrodinger(a.theory(), c * a.schrodinger(), true);
}

// ---------------------------------------------------------------- Experiment / Observable

std::vector<State> spanning_states(const Theory& theory) {
  const int d = theory.d();
  std::vector<State> out;
  auto push_pure = [&](const CVector& psi) {
    out.push_back(State::from_matrix(theory, psi * psi.adjoint()));
  };
  for (int i = 0; i < d; ++i) push_pure(CVector::Unit(d, i));
  if (theory.backend() == Backend::classical) return out;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CVector plus = CVector::Zero(d);
      plus(i) = r;
      plus(j) = r;
      push_pure(plus);
      plus(j) = kI * r;
      push_pure(plus);
    }
  return out;
}

Experiment::Experiment(std::vector<Transformation> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw CompletenessError("Experiment: no branches");
  RVector sum = RVector::Zero(theory().dim());
  for (const auto& b : branches_) {
    require_same_backend(theory(), b.theory(), "Experiment");
    sum += b.effect().coords();
  }
  for (const auto& w : spanning_states(theory())) {
    const double p = w.coords().dot(sum);
    if (std::abs(p - 1.0) > tol::kProbability)
      throw CompletenessError("Experiment: branch probabilities sum to " + fmt_double(p) + ", not 1");
  }
}

Transformation Experiment::deterministic() const {
  RMatrix s = RMatrix::Zero(theory().dim(), theory().dim());
  bool generalized = false;
  for (const auto& b : branches_) {
    s += b.schrodinger();
    generalized = generalized || b.generalized();
  }
  return Transformation::from_schrodinger(theory(), std::move(s), generalized);
}

Observable::Observable(std::vector<Effect> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw CompletenessError("Observable: no effects");
  RVector sum = RVector::Zero(theory().dim());
  for (const auto& e : effects_) {
    require_same_backend(theory(), e.theory(), "Observable");
    sum += e.coords();
  }
  const double dev = (sum - theory().unit()).cwiseAbs().maxCoeff();
  if (dev > tol::kProbability)
    throw CompletenessError("Observable: effects do not sum to the unit (deviation " + fmt_double(dev) + ")");
}

// ---------------------------------------------------------------- operations

double pair(const Weight& w, const Effect& e) {
  require_same_backend(w.theory(), e.theory(), "pair");
  return w.coords().dot(e.coords());
}

Weight act(const Transformation& t, const Weight& w) {
  require_same_backend(t.theory(), w.theory(), "act");
  return Weight(w.theory(), t.schrodinger() * w.coords(), t.generalized() || w.generalized());
}

std::pair<double, State> condition(const State& state, const Transformation& t) {
  require_same_backend(state.theory(), t.theory(), "condition");
  const double p = pair(state, t.effect());
  if (p <= tol::kProbability)
    throw ZeroProbability("condition: probability " + fmt_double(p) + " is below the cutoff");
  return {p, State(state.theory(), t.schrodinger() * state.coords() / p)};
}

Effect evolve_effect(const Effect& b, const Transformation& a) {
  require_same_backend(b.theory(), a.theory(), "evolve_effect");
  return Effect(b.theory(), a.heisenberg() * b.coords(), a.generalized() || b.generalized());
}

Transformation compose(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "compose");
  return Transformation::from_schrodinger(a.theory(), a.schrodinger() * b.schrodinger(),
                                          a.generalized() || b.generalized());
}

bool coexistent(const Transformation& a, const Transformation& b) {
  return trans_norm(a + b).value() <= 1.0 + tol::kProbability;
}

Transformation add(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "add");
  if (!coexistent(a, b)) throw NotCoexistent("add: the sum is not a contraction");
  return Transformation::from_schrodinger(a.theory(), a.schrodinger() + b.schrodinger(),
                                          a.generalized() || b.generalized());
}

Transformation scale(double lambda, const Transformation& a) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("scale: lambda outside [0,1]");
  return Transformation::from_schrodinger(a.theory(), lambda * a.schrodinger(), a.generalized());
}

bool informationally_equiv(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "informationally_equiv");
  const Effect ea = a.effect(), eb = b.effect();
  for (const auto& w : spanning_states(a.theory()))
    if (std::abs(pair(w, ea) - pair(w, eb)) > tol::kProbability) return false;
  return true;
}

bool dynamically_equiv(const Transformation& a, const Transformation& b) {
  require_same_backend(a.theory(), b.theory(), "dynamically_equiv");
  const Effect ea = a.effect(), eb = b.effect();
  for (const auto& w : spanning_states(a.theory())) {
    const double pa = pair(w, ea), pb = pair(w, eb);
    const bool da = pa > tol::kProbability, db = pb > tol::kProbability;
    if (da != db) return false;
    if (!da) continue;
    const RVector ca = a.schrodinger() * w.coords() / pa;
    const RVector cb = b.schrodinger() * w.coords() / pb;
    if ((ca - cb).cwiseAbs().maxCoeff() > tol::kProbability) return false;
  }
  return true;
}

double effect_norm(const Effect& e) { return spectral_norm_hermitian(e.matrix()); }

double weight_norm(const Weight& w) { return trace_norm(w.matrix()); }

// ---------------------------------------------------------------- transformation norm

namespace {

CMatrix sign_of(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
  RVector s = es.eigenvalues().unaryExpr([](double x) { return x >= 0.0 ? 1.0 : -1.0; });
  return es.eigenvectors() * s.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CVector top_eigenvector(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
  return es.eigenvectors().col(es.eigenvalues().size() - 1);
}

}  // namespace

NormEstimate trans_norm(const Transformation& t, const NormOptions& options) {
  const Theory& theory = t.theory();
  const int d = theory.d();
  NormEstimate est;

  auto f = [&](const CVector& psi) { return trace_norm(t.apply(psi * psi.adjoint())); };

  if (theory.backend() == Backend::classical) {
    for (int i = 0; i < d; ++i) est.lower = std::max(est.lower, f(CVector::Unit(d, i)));
    est.upper = est.lower;
    est.starts = d;
    return est;
  }

  const auto [cp, cn] = jordan_split(t.choi());
  const CMatrix dual_abs = (partial_trace(cp, d, d, 1) + partial_trace(cn, d, d, 1)).transpose();
  est.upper = eigenvalues_hermitian(dual_abs).maxCoeff();

  // Structured starts: eigenvectors of M^dag(I) and of the Jordan bound,
  // plus the spanning pure states. These are always refined.
  std::vector<CVector> structured;
  for (const CMatrix& h : {dual_abs, CMatrix(t.apply_dual(CMatrix::Identity(d, d)))}) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
    for (int k = 0; k < d; ++k) structured.push_back(es.eigenvectors().col(k));
  }
  for (int i = 0; i < d; ++i) structured.push_back(CVector::Unit(d, i));

  std::vector<CVector> grid;
  if (d == 2) {
    for (int i = 0; i < options.grid_theta; ++i)
      for (int j = 0; j < options.grid_phi; ++j) {
        const double th = std::numbers::pi * (i + 0.5) / options.grid_theta;
        const double ph = 2.0 * std::numbers::pi * j / options.grid_phi;
        CVector psi(2);
        psi << std::cos(th / 2), std::polar(std::sin(th / 2), ph);
        grid.push_back(psi);
      }
  } else {
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < options.random_starts_per_dim * d; ++k) {
      CVector psi(d);
      for (int i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
      grid.push_back(psi.normalized());
    }
  }
  // Refine the best few grid points alongside the structured starts.
  constexpr std::size_t kRefinedGridPoints = 8;
  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t k = 0; k < grid.size(); ++k) scored.emplace_back(f(grid[k]), k);
  std::sort(scored.begin(), scored.end(), [](auto& x, auto& y) { return x.first > y.first; });
  std::vector<CVector> starts = structured;
  for (std::size_t k = 0; k < std::min(kRefinedGridPoints, scored.size()); ++k)
    starts.push_back(grid[scored[k].second]);
  if (!scored.empty()) est.lower = scored.front().first;

  // Alternating ascent: f(psi) = max_{||S||<=1} <psi|M^dag(S)|psi>, so
  // S <- sign(M(psi psi^dag)), psi <- top eigenvector of M^dag(S) never decreases f.
  for (const CVector& start : starts) {
    CVector psi = start;
    double value = f(psi);
    for (int it = 0; it < options.max_iterations; ++it) {
      ++est.iterations;
      const CVector next = top_eigenvector(t.apply_dual(sign_of(t.apply(psi * psi.adjoint()))));
      const double next_value = f(next);
      if (next_value <= value + options.refine_tolerance) break;
      psi = next;
      value = next_value;
    }
    est.lower = std::max(est.lower, value);
  }
  est.starts = static_cast<int>(grid.size() + structured.size());
  return est;
}

}  // namespace gpt
