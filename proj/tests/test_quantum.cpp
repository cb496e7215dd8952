#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpt/quantum.hpp"
#include "oracles.hpp"

using namespace gpt;
using doctest::Approx;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Random CP trace-nonincreasing Kraus pair, independent of the library sampler.
std::vector<CMatrix> random_kraus(Sampler& s, int d) {
  const CMatrix v = s.haar_unitary(3 * d).leftCols(d);
  return {v.topRows(d), v.middleRows(d, d)};
}

}  // namespace

TEST_CASE("max_entangled") {
  const BipartiteState phi = max_entangled(2);
  CMatrix expected = CMatrix::Zero(4, 4);
  for (int a : {0, 3})
    for (int b : {0, 3}) expected(a, b) = 0.5;
  CHECK(max_diff(phi.matrix(), expected) < 1e-15);
  CHECK(max_diff(local_state(phi, 1).matrix(), oracle::partial_trace_loops(phi.matrix(), 2, 1)) < 1e-14);
  CHECK(max_diff(local_state(phi, 1).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-14);
  const CMatrix m3 = max_entangled(3).matrix();
  CHECK(max_diff(m3, oracle::max_entangled(3)) < 1e-15);
  CHECK_THROWS(max_entangled(1));
}

TEST_CASE("local_state") {
  Sampler s(21);
  const CMatrix r1 = s.random_density(3), r2 = s.random_density(3);
  const BipartiteState prod = product_state(r1, r2);
  CHECK(max_diff(local_state(prod, 1).matrix(), r1) < 1e-14);
  CHECK(max_diff(local_state(prod, 2).matrix(), r2) < 1e-14);
  CHECK(max_diff(local_state(max_entangled(2), 2).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-14);

  const CMatrix corr = 0.5 * (oracle::ket_bra(4, 0, 0) + oracle::ket_bra(4, 3, 3));
  const BipartiteState classical(corr, 2);
  CHECK(max_diff(local_state(classical, 1).matrix(), oracle::partial_trace_loops(corr, 2, 1)) < 1e-15);
  CHECK(max_diff(local_state(classical, 1).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("apply_local") {
  const Theory q2 = Theory::quantum(2);
  const BipartiteState phi = max_entangled(2);
  for (int slot : {1, 2})
    CHECK(max_diff(apply_local(phi, Transformation::identity(q2), slot).matrix(), phi.matrix()) < 1e-14);

  const CMatrix p = oracle::ket_bra(2, 0, 0);
  const Weight w = apply_local(phi, Transformation::from_kraus(q2, {p}), 1);
  const CMatrix expected = oracle::apply_kraus_local({p}, phi.matrix(), 2, 1);
  CHECK(max_diff(w.matrix(), expected) < 1e-14);
  CHECK(max_diff(expected, 0.5 * oracle::ket_bra(4, 0, 0)) < 1e-15);

  CHECK_THROWS_AS(apply_local(phi, Transformation::identity(Theory::quantum(3)), 1), DimensionMismatch);
}

TEST_CASE("no_signaling_check") {
  const Theory q2 = Theory::quantum(2);
  Sampler s(22);
  const Experiment proj({Transformation::from_kraus(q2, {oracle::ket_bra(2, 0, 0)}),
                         Transformation::from_kraus(q2, {oracle::ket_bra(2, 1, 1)})});
  for (int k = 0; k < 5; ++k) CHECK(no_signaling_check(s.random_bipartite(2), proj));

  // Depolarizing channel split into two branches: with and without a Pauli error.
  const double p = 0.3;
  const Experiment depol({Transformation::from_kraus(q2, {std::sqrt(1 - p) * CMatrix::Identity(2, 2)}),
                          Transformation::from_kraus(q2, {std::sqrt(p / 3) * oracle::pauli_x(),
                                                          std::sqrt(p / 3) * oracle::pauli_y(),
                                                          std::sqrt(p / 3) * oracle::pauli_z()})});
  CHECK(no_signaling_check(max_entangled(2), depol));
  const Weight after = apply_local(max_entangled(2), depol.deterministic(), 1);
  CHECK(max_diff(oracle::partial_trace_loops(after.matrix(), 2, 2), CMatrix::Identity(2, 2) / 2.0) < 1e-14);

  CHECK_THROWS_AS(Experiment({Transformation::from_kraus(q2, {oracle::ket_bra(2, 0, 0)})}), CompletenessError);
}

TEST_CASE("kraus_to_choi and cp_check") {
  const ChoiMap id = kraus_to_choi({CMatrix::Identity(2, 2)});
  CHECK(max_diff(id.matrix, 2.0 * oracle::max_entangled(2)) < 1e-15);
  CHECK(cp_check(id));

  const ChoiMap lower = kraus_to_choi({oracle::ket_bra(2, 0, 1)});
  CHECK(cp_check(lower));
  const RVector ev = eigenvalues_hermitian(lower.matrix);
  CHECK((ev.array() > 1e-12).count() == 1);

  CMatrix bad = id.matrix;
  bad += -0.1 * oracle::ket_bra(4, 1, 1);
  CHECK_FALSE(cp_check({bad, 2}));
  CHECK_FALSE(cp_check(kraus_to_choi({1.1 * CMatrix::Identity(2, 2)})));
}

TEST_CASE("samplers") {
  Sampler s(23);
  const Theory q2 = Theory::quantum(2);
  CMatrix mean = CMatrix::Zero(2, 2);
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const CMatrix r = s.random_density(2);
    if (k < 100) {
      CHECK(std::abs(r.trace() - 1.0) < 1e-12);
      CHECK(eigenvalues_hermitian(r).minCoeff() >= -1e-12);
    }
    mean += r / double(n);
  }
  CHECK(max_diff(mean, CMatrix::Identity(2, 2) / 2.0) < 0.05);
  for (int k = 0; k < 20; ++k) {
    CHECK(cp_check({s.random_cp(q2).choi(), 2}));
    const CMatrix u = s.haar_unitary(3);
    CHECK(max_diff(u.adjoint() * u, CMatrix::Identity(3, 3)) < 1e-12);
  }
  Sampler a(99), b(99);
  CHECK(max_diff(a.random_density(3), b.random_density(3)) == 0.0);
}

TEST_CASE("property: no-signaling on random joint states and channels") {
  const Theory q2 = Theory::quantum(2);
  Sampler s(24);
  for (int k = 0; k < 100; ++k) {
    const BipartiteState joint = s.random_bipartite(2);
    const CMatrix v = s.haar_unitary(6).leftCols(2);
    const Experiment exp({Transformation::from_kraus(q2, {v.topRows(2)}),
                          Transformation::from_kraus(q2, {v.middleRows(2, 2), v.bottomRows(2)})});
    CHECK(no_signaling_check(joint, exp));
    const CMatrix after = oracle::apply_kraus_local({v.topRows(2), v.middleRows(2, 2), v.bottomRows(2)},
                                                    joint.matrix(), 2, 1);
    CHECK(max_diff(oracle::partial_trace_loops(after, 2, 2), oracle::partial_trace_loops(joint.matrix(), 2, 2)) < 1e-9);
  }
}

TEST_CASE("property: local actions on different slots commute") {
  const Theory q3 = Theory::quantum(3);
  Sampler s(25);
  for (int k = 0; k < 100; ++k) {
    const BipartiteState joint = s.random_bipartite(3);
    const Transformation a = s.random_cp(q3), b = s.random_cp(q3);
    const Weight ab = apply_local(apply_local(Weight(joint.state()), a, 1), b, 2);
    const Weight ba = apply_local(apply_local(Weight(joint.state()), b, 2), a, 1);
    CHECK(max_diff(ab.matrix(), ba.matrix()) < 1e-12);
  }
}

TEST_CASE("property: Choi assembly matches direct Kraus action") {
  Sampler s(26);
  for (int d : {2, 3}) {
    const Theory t = Theory::quantum(d);
    for (int k = 0; k < 50; ++k) {
      const auto kraus = random_kraus(s, d);
      const Transformation m = Transformation::from_choi(t, kraus_to_choi(kraus).matrix);
      const CMatrix rho = s.random_density(d);
      CHECK(max_diff(m.apply(rho), oracle::apply_kraus(kraus, rho)) < 1e-12);
      const Transformation direct = Transformation::from_kraus(t, kraus);
      CHECK(max_diff(direct.apply(rho), oracle::apply_kraus(kraus, rho)) < 1e-12);
      const BipartiteState joint = s.random_bipartite(d);
      CHECK(max_diff(apply_local(joint, direct, 2).matrix(), oracle::apply_kraus_local(kraus, joint.matrix(), d, 2)) < 1e-12);
    }
  }
}

TEST_CASE("conditioning on one slot affects the other") {
  const Theory q2 = Theory::quantum(2);
  const BipartiteState phi = max_entangled(2);
  const Weight w = apply_local(phi, Transformation::from_kraus(q2, {oracle::ket_bra(2, 0, 0)}), 1);
  const CMatrix cond = local_weight(w, 2, 2).matrix() / w.total();
  CHECK(trace_distance(cond, CMatrix::Identity(2, 2) / 2.0) > 0.1);
  CHECK(trace_distance(cond, CMatrix::Identity(2, 2) / 2.0) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("classical backend") {
  const Theory c3 = Theory::classical(3);
  Sampler s(27);
  for (int k = 0; k < 20; ++k) {
    const State w = s.random_state(c3);
    CHECK(w.total() == Approx(1.0).epsilon(1e-12));
    CHECK(w.coords().minCoeff() >= 0.0);
    const Transformation t = s.random_cp(c3);
    CHECK(t.schrodinger().minCoeff() >= 0.0);
    CHECK(t.schrodinger().colwise().sum().maxCoeff() <= 1.0 + 1e-12);
  }
}
