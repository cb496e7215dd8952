// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Suite results come from the library; the literal rank values and the
// index-loop oracles are independent of it.

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gpt/cli/suites.hpp"
#include "gpt/gns.hpp"
#include "oracles.hpp"

using namespace gpt;
using namespace gpt::cli;

namespace {

using Kraus = std::vector<CMatrix>;

struct Criterion {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

TheorySpec quantum(int d, int d2, std::uint64_t seed = 42) {
  TheorySpec s;
  s.backend = Backend::quantum;
  s.d = d;
  s.d2 = d2;
  s.seed = seed;
  return s;
}

TheorySpec classical(int d) {
  TheorySpec s = quantum(d, d);
  s.backend = Backend::classical;
  return s;
}

const CheckResult* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

double value(const CheckResult& c, const std::string& key) {
  for (const auto& [k, v] : c.values)
    if (k == key) return v;
  return std::nan("");
}

std::string tag(const Report& r, const std::string& name) { return r.backend + " d=" + std::to_string(r.d) + " " + name; }

/// Check `name` passed, and every (key, bound) satisfies value <= bound.
void passes(Criterion& cr, const Report& r, const std::string& name, std::map<std::string, double> bounds = {}) {
  const CheckResult* c = find(r, name);
  if (!c) return cr.require(false, tag(r, name) + " missing");
  cr.require(c->status == Status::pass, tag(r, name) + " status " + to_string(c->status) + " " + c->message);
  for (const auto& [k, bound] : bounds) {
    const double v = value(*c, k);
    cr.require(v <= bound, tag(r, name) + " " + k + "=" + format_number(v));
  }
}

void fails(Criterion& cr, const Report& r, const std::string& name) {
  const CheckResult* c = find(r, name);
  if (!c) return cr.require(false, tag(r, name) + " missing");
  cr.require(c->status == Status::fail, tag(r, name) + " expected fail, got " + to_string(c->status));
}

/// Table row with lhs = rhs = expected.
void row(Criterion& cr, const Report& r, const std::string& name, int expected) {
  passes(cr, r, "table1." + name);
  if (const CheckResult* c = find(r, "table1." + name)) {
    cr.require(value(*c, "lhs") == expected, tag(r, name) + " lhs " + format_number(value(*c, "lhs")));
    cr.require(value(*c, "rhs") == expected, tag(r, name) + " rhs " + format_number(value(*c, "rhs")));
  }
}

Kraus random_kraus(Sampler& s, int d) {
  const CMatrix v = s.haar_unitary(3 * d).leftCols(d);
  const double scale = std::sqrt(s.uniform());
  return {scale * v.topRows(d), scale * v.middleRows(d, d)};
}

std::string structured(const Report& r) {
  std::ostringstream os;
  emit_report(r, Format::structured, os);
  return os.str();
}

Criterion table1() {
  Criterion cr;
  const Report q2 = run_suite(quantum(2, 2), "table1");
  row(cr, q2, "D2", 4);
  row(cr, q2, "D34'", 3);
  row(cr, q2, "P", 4);
  row(cr, q2, "D3", 15);
  row(cr, q2, "tensor", 4);
  row(cr, q2, "D4", 3);
  row(cr, q2, "T", 16);
  const Report q3 = run_suite(quantum(3, 3), "table1");
  row(cr, q3, "D34'", 8);
  row(cr, q3, "D3", 80);
  return cr;
}

Criterion negative_control() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(classical(d), "table1");
    fails(cr, r, "table1.D34'");
    if (const CheckResult* c = find(r, "table1.D34'")) {
      cr.require(c->expected_fail && c->ok(), tag(r, "D34'") + " not flagged as the expected violation");
      cr.require(value(*c, "lhs") != value(*c, "rhs"), tag(r, "D34'") + " lhs equals rhs");
    }
  }
  return cr;
}

Criterion faithfulness() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(quantum(d, d), "faithful");
    passes(cr, r, "faithful.symmetric");
    passes(cr, r, "faithful.dynamical");
    if (const CheckResult* c = find(r, "faithful.dynamical"))
      cr.require(value(*c, "rank") == d * d * d * d, tag(r, "dynamical rank"));
    passes(cr, r, "faithful.preparational", {{"max_witness_residual", 1e-9}});

    TheorySpec prod = quantum(d, d);
    prod.faithful_state = oracle::kron_loops(CMatrix::Identity(d, d) / double(d), CMatrix::Identity(d, d) / double(d));
    const Report p = run_suite(prod, "faithful");
    fails(cr, p, "faithful.dynamical");
    fails(cr, p, "faithful.preparational");

    TheorySpec pure = quantum(d, d);
    const CMatrix k0 = oracle::ket_bra(d, 0, 0);
    pure.faithful_state = oracle::kron_loops(k0, k0);
    const Report q = run_suite(pure, "faithful");
    fails(cr, q, "faithful.dynamical");
    fails(cr, q, "faithful.preparational");
  }
  return cr;
}

Criterion split() {
  Criterion cr;
  const Theory q2 = Theory::quantum(2);
  const SpectralSplit sp = spectral_split(max_entangled(2));
  cr.require(sp.n_plus == 3 && sp.n_minus == 1, "signature is not (3,1)");
  const RVector y = q2.coords(oracle::pauli_y() / std::sqrt(2.0));
  cr.require((sp.p_minus - y * y.transpose()).cwiseAbs().maxCoeff() <= 1e-12, "negative direction is not sigma_y");
  for (int d : {2, 3}) {
    const SpectralSplit s = spectral_split(max_entangled(d));
    Eigen::SelfAdjointEigenSolver<RMatrix> es(s.gram_abs, Eigen::EigenvaluesOnly);
    cr.require(std::abs(es.eigenvalues().minCoeff() - 1.0 / d) <= 1e-12, "min |Phi| eigenvalue for d=" + std::to_string(d));
    const RMatrix id = RMatrix::Identity(s.gram.rows(), s.gram.cols());
    cr.require((s.sigma() * s.sigma() - id).cwiseAbs().maxCoeff() <= 1e-12, "sigma^2 for d=" + std::to_string(d));
  }
  return cr;
}

Criterion transpose() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(quantum(d, d), "gns");
    passes(cr, r, "gns.transpose", {{"max_residual", 1e-10}});
    passes(cr, r, "gns.transpose_axioms");
    passes(cr, r, "gns.transpose_kraus");

    const Theory t = Theory::quantum(d);
    const BipartiteState phi = max_entangled(d);
    Sampler s(7000 + d);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Kraus ka = random_kraus(s, d);
      Kraus kt;
      for (const auto& m : ka) kt.push_back(m.transpose());
      const RMatrix got = transpose_map(phi, Transformation::from_kraus(t, ka)).schrodinger();
      // Transposed Kraus sets need not be trace nonincreasing.
      const RMatrix want = Transformation::from_choi(t, kraus_to_choi(kt).matrix, true).schrodinger();
      worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
    }
    cr.require(worst <= 1e-12, "Kraus transpose oracle d=" + std::to_string(d) + " " + format_number(worst));
  }
  return cr;
}

Criterion adjoint() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(quantum(d, d), "gns");
    passes(cr, r, "gns.adjoint_relation", {{"max_residual", 1e-9}});
    passes(cr, r, "gns.homomorphism", {{"homomorphism", 1e-12}});
    passes(cr, r, "gns.rep_adjoint", {{"max_deviation", 1e-12}});
    passes(cr, r, "gns.cstar", {{"max_deviation", 1e-9}});
  }
  // Kraus {c I}: the Phi-norm of c*id is c^2, so both sides are c^4.
  const double c = 0.6;
  const GnsSpace space(max_entangled(2));
  const auto [lhs, rhs] = cstar_check(space, Transformation::from_kraus(Theory::quantum(2), {c * CMatrix::Identity(2, 2)}));
  cr.require(std::abs(lhs - c * c * c * c) <= 1e-9 && std::abs(rhs - c * c * c * c) <= 1e-9, "scaled identity C* values");
  return cr;
}

Criterion born() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(quantum(d, d), "born");
    passes(cr, r, "born.ic_set", {{"max_deviation", 1e-9}});
    passes(cr, r, "born.three_term", {{"max_deviation", 1e-9}});
  }
  return cr;
}

Criterion banach() {
  Criterion cr;
  for (const TheorySpec& spec : {quantum(2, 2), quantum(3, 3), classical(3)}) {
    const Report r = run_suite(spec, "norms");
    passes(cr, r, "norms.banach", {{"max_excess", 1e-9}});
    passes(cr, r, "norms.contraction", {{"max_norm", 1.0 + 1e-9}});
    passes(cr, r, "norms.coexistence", {{"mismatches", 0.0}});
  }
  return cr;
}

Criterion no_signaling() {
  Criterion cr;
  for (int d : {2, 3}) {
    const Report r = run_suite(quantum(d, d), "core");
    passes(cr, r, "core.no_signaling", {{"max_deviation", 1e-9}});
    passes(cr, r, "core.conditioning");
    if (const CheckResult* c = find(r, "core.conditioning"))
      cr.require(value(*c, "trace_distance") > 0.1, tag(r, "conditioning trace distance"));
  }

  // Amplitude damping on slot 1, checked on slot 2 with index-loop partial traces.
  Sampler s(9001);
  const double g = 0.4;
  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1 - g);
  k1(0, 1) = std::sqrt(g);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BipartiteState joint = s.random_bipartite(2);
    const CMatrix after = oracle::apply_kraus_local({k0, k1}, joint.matrix(), 2, 1);
    const CMatrix lib = apply_local(joint, Transformation::from_kraus(Theory::quantum(2), {k0, k1}), 1).matrix();
    const CMatrix before2 = oracle::partial_trace_loops(joint.matrix(), 2, 2);
    worst = std::max({worst, (oracle::partial_trace_loops(after, 2, 2) - before2).cwiseAbs().maxCoeff(),
                      (oracle::partial_trace_loops(lib, 2, 2) - before2).cwiseAbs().maxCoeff(),
                      (local_state(joint, 2).matrix() - before2).cwiseAbs().maxCoeff()});
  }
  cr.require(worst <= 1e-9, "oracle no-signaling deviation " + format_number(worst));
  return cr;
}

Criterion determinism() {
  Criterion cr;
  for (const TheorySpec& spec : {quantum(2, 2), quantum(3, 3), classical(2)}) {
    const std::string a = structured(run_suite(spec, "all"));
    const std::string b = structured(run_suite(spec, "all"));
    cr.require(!a.empty() && a == b, to_string(spec.backend) + " d=" + std::to_string(spec.d) + " reports differ");
  }
  return cr;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"table 1 ranks", table1},
      {"classical negative control", negative_control},
      {"faithfulness", faithfulness},
      {"spectral split", split},
      {"transpose", transpose},
      {"adjoint and GNS", adjoint},
      {"Born rule", born},
      {"Banach properties", banach},
      {"no-signaling", no_signaling},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion cr;
    try {
      cr = criteria[i].second();
    } catch (const std::exception& e) {
      cr.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = cr.problems.empty();
    failed += !ok;
    std::printf("%s %2zu %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& p : cr.problems) std::printf("       %s\n", p.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
