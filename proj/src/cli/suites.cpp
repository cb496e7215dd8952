#include "gpt/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include "gpt/gns.hpp"
#include "gpt/infodim.hpp"

#ifndef GPT_VERSION
#define GPT_VERSION "0.0.0"
#endif

namespace gpt::cli {

std::string version() { return GPT_VERSION; }

std::uint64_t check_seed(std::uint64_t master, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = master ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "norms", "infodim", "table1", "faithful", "gns", "born", "all"};
  return names;
}

namespace {

enum class TolKind { probability, algebra, residual };

struct Context {
  const TheorySpec& spec;
  Theory theory;
  Sampler sampler;
  double tol;
  int samples;
  std::vector<std::pair<std::string, double>> values;
  std::string message;

  void value(const std::string& k, double v) { values.emplace_back(k, v); }
};

struct CheckDef {
  std::string name;
  std::string anchor;
  TolKind tol;
  bool quantum_only;
  std::function<bool(Context&)> run;
};

double max_abs(const RVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const RMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Measure-and-prepare map rho -> Tr[F rho] sigma, in any backend.
Transformation measure_prepare(const Effect& f, const State& sigma) {
  return Transformation::from_schrodinger(f.theory(), sigma.coords() * f.coords().transpose());
}

/// Three-branch experiment {A, 0.4 C, 0.6 C} with C completing A.
Experiment random_experiment(Sampler& s, const Theory& t) {
  const Transformation a = s.random_cp(t);
  const Effect rest(t, t.unit() - a.effect().coords());
  const Transformation c = measure_prepare(rest, s.random_state(t));
  return Experiment({a, Transformation::from_schrodinger(t, 0.4 * c.schrodinger()),
                     Transformation::from_schrodinger(t, 0.6 * c.schrodinger())});
}

/// The cyclic shift |i> -> |i+1>.
Transformation shift_map(const Theory& t) {
  const int d = t.d();
  if (t.backend() == Backend::classical) {
    RMatrix p = RMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) p((i + 1) % d, i) = 1.0;
    return Transformation::from_schrodinger(t, p);
  }
  CMatrix x = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
  return Transformation::from_kraus(t, {x});
}

Transformation first_projector(const Theory& t) {
  CMatrix p = CMatrix::Zero(t.d(), t.d());
  p(0, 0) = 1.0;
  return Transformation::from_schrodinger(t, t.coords(p) * t.coords(p).transpose());
}

BipartiteState faithful_state(const TheorySpec& spec) {
  if (spec.faithful_state) return BipartiteState(*spec.faithful_state, spec.d);
  return max_entangled(spec.d);
}

bool is_max_entangled(const TheorySpec& spec) {
  return !spec.faithful_state || max_abs(CMatrix(*spec.faithful_state - max_entangled(spec.d).matrix())) < 1e-12;
}

// ------------------------------------------------------------------ core

std::vector<CheckDef> core_checks() {
  std::vector<CheckDef> c;
  c.push_back({"core.completeness", "completeness", TolKind::probability, false, [](Context& x) {
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Experiment e = random_experiment(x.sampler, x.theory);
                   const State w = x.sampler.random_state(x.theory);
                   double total = 0.0;
                   for (const auto& b : e.branches()) total += pair(w, b.effect());
                   dev = std::max(dev, std::abs(total - 1.0));
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"core.bayes", "Bayes conditioning", TolKind::probability, false, [](Context& x) {
                 double dev = 0.0;
                 int used = 0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_cp(x.theory);
                   const State w = x.sampler.random_state(x.theory);
                   const double p = pair(w, a.effect());
                   if (p <= 1e-9) continue;
                   ++used;
                   const auto [q, post] = condition(w, a);
                   dev = std::max({dev, std::abs(q - p), max_abs(RVector(post.coords() - act(a, w).normalize().coords()))});
                 }
                 x.value("max_deviation", dev);
                 x.value("samples", used);
                 return dev <= x.tol;
               }});
  c.push_back({"core.duality", "duality", TolKind::probability, false, [](Context& x) {
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_cp(x.theory);
                   const State w = x.sampler.random_state(x.theory);
                   const Effect b = x.sampler.random_effect(x.theory);
                   dev = std::max(dev, std::abs(pair(w, evolve_effect(b, a)) - pair(act(a, w), b)));
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"core.monoid", "monoid", TolKind::algebra, false, [](Context& x) {
                 double assoc = 0.0, neutral = 0.0;
                 const Transformation id = Transformation::identity(x.theory);
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   const Transformation cc = x.sampler.random_generalized(x.theory);
                   assoc = std::max(assoc, max_abs(RMatrix(compose(compose(a, b), cc).schrodinger() -
                                                           compose(a, compose(b, cc)).schrodinger())));
                   neutral = std::max({neutral, max_abs(RMatrix(compose(id, a).schrodinger() - a.schrodinger())),
                                       max_abs(RMatrix(compose(a, id).schrodinger() - a.schrodinger()))});
                 }
                 x.value("associativity", assoc);
                 x.value("identity", neutral);
                 return assoc <= x.tol && neutral == 0.0;
               }});
  c.push_back({"core.equivalence", "equivalence", TolKind::probability, false, [](Context& x) {
                 const Transformation id = Transformation::identity(x.theory);
                 const Transformation shift = shift_map(x.theory);
                 const Transformation p = first_projector(x.theory);
                 const bool shift_info = informationally_equiv(shift, id), shift_dyn = dynamically_equiv(shift, id);
                 const bool half_info = informationally_equiv(p, scale(0.5, p)), half_dyn = dynamically_equiv(p, scale(0.5, p));
                 x.value("shift_informational", shift_info);
                 x.value("shift_dynamical", shift_dyn);
                 x.value("half_informational", half_info);
                 x.value("half_dynamical", half_dyn);
                 return shift_info && !shift_dyn && !half_info && half_dyn;
               }});
  c.push_back({"core.no_signaling", "no-signaling", TolKind::probability, true, [](Context& x) {
                 const int d = x.theory.d();
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const BipartiteState joint = x.sampler.random_bipartite(d);
                   const CMatrix v = x.sampler.haar_unitary(3 * d).leftCols(d);
                   const Experiment e({Transformation::from_kraus(x.theory, {v.topRows(d)}),
                                       Transformation::from_kraus(x.theory, {v.middleRows(d, d), v.bottomRows(d)})});
                   const Weight after = apply_local(joint, e.deterministic(), 1);
                   dev = std::max(dev, max_abs(CMatrix(local_weight(after, d, 2).matrix() - local_state(joint, 2).matrix())));
                   if (!no_signaling_check(joint, e)) dev = std::max(dev, 1.0);
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"core.conditioning", "local-state update", TolKind::probability, true, [](Context& x) {
                 const int d = x.theory.d();
                 const BipartiteState phi = max_entangled(d);
                 const Weight w = apply_local(phi, first_projector(x.theory), 1);
                 const CMatrix cond = local_weight(w, d, 2).matrix() / w.total();
                 const double dist = trace_distance(cond, CMatrix::Identity(d, d) / double(d));
                 x.value("trace_distance", dist);
                 x.value("threshold", 0.1);
                 return dist > 0.1;
               }});
  return c;
}

// ------------------------------------------------------------------ norms

std::vector<CheckDef> norm_checks() {
  std::vector<CheckDef> c;
  c.push_back({"norms.banach", "norm inequality", TolKind::probability, false, [](Context& x) {
                 double worst = -1e300, gap = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   const NormEstimate na = trans_norm(a), nb = trans_norm(b), nba = trans_norm(compose(b, a));
                   worst = std::max(worst, nba.value() - nb.value() * na.value());
                   gap = std::max({gap, na.gap(), nb.gap(), nba.gap()});
                 }
                 x.value("max_excess", worst);
                 x.value("max_certificate_gap", gap);
                 return worst <= x.tol;
               }});
  c.push_back({"norms.effect_bound", "effect norm bound", TolKind::probability, false, [](Context& x) {
                 double worst = -1e300;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   worst = std::max(worst, effect_norm(a.effect()) - trans_norm(a).value());
                 }
                 x.value("max_excess", worst);
                 return worst <= x.tol;
               }});
  c.push_back({"norms.contraction", "contraction", TolKind::probability, false, [](Context& x) {
                 double worst = 0.0, gap = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const NormEstimate n = trans_norm(x.sampler.random_cp(x.theory));
                   worst = std::max(worst, n.value());
                   gap = std::max(gap, n.gap());
                 }
                 x.value("max_norm", worst);
                 x.value("max_certificate_gap", gap);
                 return worst <= 1.0 + x.tol;
               }});
  c.push_back({"norms.coexistence", "coexistence", TolKind::probability, false, [](Context& x) {
                 int mismatches = 0, coexisting = 0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = scale(x.sampler.uniform(), x.sampler.random_cp(x.theory));
                   const Transformation b = scale(x.sampler.uniform(), x.sampler.random_cp(x.theory));
                   const bool co = coexistent(a, b);
                   // Independent criterion: the summed effect stays below the unit.
                   const Effect sum(x.theory, a.effect().coords() + b.effect().coords(), true);
                   const bool below = eigenvalues_hermitian(sum.matrix()).maxCoeff() <= 1.0 + x.tol;
                   if (co != below) ++mismatches;
                   if (co) ++coexisting;
                 }
                 x.value("mismatches", mismatches);
                 x.value("coexistent_pairs", coexisting);
                 return mismatches == 0;
               }});
  c.push_back({"norms.predictable", "predictable norm", TolKind::probability, false, [](Context& x) {
                 const NormEstimate n = trans_norm(first_projector(x.theory));
                 x.value("norm", n.value());
                 x.value("upper", n.upper);
                 return std::abs(n.value() - 1.0) <= x.tol && n.gap() <= x.tol;
               }});
  return c;
}

// ------------------------------------------------------------------ infodim

Observable reference_observable(const Theory& t) {
  return t.backend() == Backend::quantum ? minimal_ic_povm(t.d()) : projective_povm(t);
}

std::vector<CheckDef> infodim_checks() {
  std::vector<CheckDef> c;
  c.push_back({"infodim.minimal_ic", "minimal IC", TolKind::probability, false, [](Context& x) {
                 const Observable obs = reference_observable(x.theory);
                 x.value("rank", ic_rank(obs));
                 x.value("outcomes", static_cast<double>(obs.size()));
                 x.value("dim_effects", x.theory.dim());
                 bool ok = is_minimal_ic(obs);
                 if (x.theory.backend() == Backend::quantum && x.theory.d() == 2) {
                   ok = ok && is_minimal_ic(tetrahedron_povm()) && is_informationally_complete(pauli6_povm()) &&
                        !is_minimal_ic(pauli6_povm());
                 }
                 return ok;
               }});
  c.push_back({"infodim.idim", "informational dimension", TolKind::probability, false, [](Context& x) {
                 const IdimCertificate cert = informational_dimension_certificate(x.theory);
                 x.value("idim", cert.idim);
                 x.value("upper_bound", cert.upper_bound);
                 return cert.idim == x.theory.d() && cert.upper_bound == cert.idim && cert.discriminates &&
                        cert.predictable_resolved;
               }});
  c.push_back({"infodim.predictable", "predictable and resolved", TolKind::probability, false, [](Context& x) {
                 const Effect p = first_projector(x.theory).effect();
                 const bool ok = is_predictable(p) && is_resolved(p) && !is_predictable(Effect::unit(x.theory));
                 x.value("projector_predictable", is_predictable(p));
                 x.value("unit_predictable", is_predictable(Effect::unit(x.theory)));
                 return ok;
               }});
  c.push_back({"infodim.ic_roundtrip", "Bloch representation", TolKind::probability, false, [](Context& x) {
                 const Observable obs = reference_observable(x.theory);
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Effect e = x.sampler.random_effect(x.theory);
                   const State w = x.sampler.random_state(x.theory);
                   const RVector c = ic_expand(e, obs);
                   double recon = 0.0;
                   for (std::size_t i = 0; i < obs.size(); ++i) recon += c(static_cast<Eigen::Index>(i)) * pair(w, obs.effects()[i]);
                   dev = std::max(dev, std::abs(recon - pair(w, e)));
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"infodim.local_observability", "local observability", TolKind::probability, false, [](Context& x) {
                 const Theory t2 = x.theory.backend() == Backend::quantum ? Theory::quantum(x.spec.d2) : Theory::classical(x.spec.d2);
                 const int rank = local_product_rank(reference_observable(x.theory), reference_observable(t2));
                 const Theory joint = x.theory.backend() == Backend::quantum ? Theory::quantum(x.theory.d() * x.spec.d2)
                                                                               : Theory::classical(x.theory.d() * x.spec.d2);
                 x.value("rank", rank);
                 x.value("joint_dim", joint.dim());
                 return rank == joint.dim();
               }});
  c.push_back({"infodim.bell_ic", "Bell IC", TolKind::probability, true, [](Context& x) {
                 const BellIcReport r = bell_ic_report(x.theory.d(), default_bell_ancilla(x.theory.d()));
                 x.value("rank", r.rank);
                 x.value("outcomes", r.outcomes);
                 x.value("adm", r.adm);
                 x.value("idim_joint", r.idim_joint);
                 return r.pass();
               }});
  return c;
}

// ------------------------------------------------------------------ table1

std::vector<CheckDef> table1_checks(const TheorySpec& spec) {
  static const std::vector<std::pair<std::string, std::string>> rows{
      {"D2", "dim(P_R) = adm(S) + 1"},
      {"D3", "adm(S12) = adm(S1) adm(S2) + adm(S1) + adm(S2)"},
      {"D4", "adm(S) = idim(S^x2) - 1"},
      {"D34", "adm(S^x2) = idim(S^x2)^2 - 1"},
      {"D34'", "adm(S) = idim(S)^2 - 1"},
      {"tensor", "idim(S^x2) = idim(S)^2"},
      {"T", "adm(T) = adm(S^x2) + 1"},
      {"P", "dim(P_R) = idim(S)^2"}};
  // One shared measurement keeps the rows consistent with each other.
  auto report = std::make_shared<std::optional<DimReport>>();
  std::vector<CheckDef> c;
  for (const auto& [row, formula] : rows) {
    const std::string name = "table1." + row;
    c.push_back({name, row, TolKind::probability, false, [report, row = row, spec](Context& x) {
                   if (!*report) {
                     Sampler s(check_seed(spec.seed, "table1"));
                     *report = dim_identities(spec.backend, spec.d, spec.d2, s);
                   }
                   const IdentityRow& r = (*report)->row(row);
                   x.value("lhs", static_cast<double>(r.lhs));
                   x.value("rhs", static_cast<double>(r.rhs));
                   return r.pass;
                 }});
  }
  return c;
}

/// Rows a classical theory must violate: everything that needs the Bell-type
/// IC observable on two copies.
bool classical_violation(const std::string& name) {
  return name == "table1.D4" || name == "table1.D34" || name == "table1.D34'" || name == "table1.P";
}

// ------------------------------------------------------------------ faithful

std::vector<CheckDef> faithful_checks() {
  std::vector<CheckDef> c;
  c.push_back({"faithful.symmetric", "symmetric state", TolKind::algebra, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 const CMatrix s = swap_operator(phi.d());
                 x.value("swap_deviation", max_abs(CMatrix(s * phi.matrix() * s - phi.matrix())));
                 return is_symmetric(phi);
               }});
  c.push_back({"faithful.dynamical", "dynamical faithfulness", TolKind::algebra, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 const int rank = dynamical_rank(phi);
                 const int d = phi.d();
                 x.value("rank", rank);
                 x.value("required", d * d * d * d);
                 return is_dynamically_faithful(phi);
               }});
  c.push_back({"faithful.preparational", "preparational faithfulness", TolKind::probability, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 const int d = phi.d();
                 const bool pf = is_preparationally_faithful(phi);
                 x.value("inverse_cp", pf);
                 if (!pf) return false;
                 double residual = 0.0, min_p = 1.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const State target = x.sampler.random_state(x.theory);
                   const PreparationWitness w = prepare_witness(phi, target);
                   const Weight out = apply_local(phi, w.map, 1);
                   residual = std::max({residual, std::abs(out.total() - w.probability),
                                        max_abs(CMatrix(local_weight(out, d, 2).matrix() / w.probability - target.matrix()))});
                   min_p = std::min(min_p, w.probability);
                 }
                 x.value("max_witness_residual", residual);
                 x.value("min_probability", min_p);
                 return residual <= x.tol && min_p > 0.0;
               }});
  c.push_back({"faithful.split", "spectral split", TolKind::algebra, true, [](Context& x) {
                 const SpectralSplit sp = spectral_split(faithful_state(x.spec));
                 Eigen::SelfAdjointEigenSolver<RMatrix> es(sp.gram_abs, Eigen::EigenvaluesOnly);
                 const RMatrix id = RMatrix::Identity(sp.gram.rows(), sp.gram.cols());
                 const double inv = max_abs(RMatrix(sp.sigma() * sp.sigma() - id));
                 const double part = max_abs(RMatrix(sp.p_plus + sp.p_minus - id));
                 x.value("n_plus", sp.n_plus);
                 x.value("n_minus", sp.n_minus);
                 x.value("min_abs_eigenvalue", es.eigenvalues().minCoeff());
                 x.value("sigma_squared_deviation", inv);
                 x.value("partition_deviation", part);
                 return es.eigenvalues().minCoeff() > tol::kEigenvalue && inv <= x.tol && part <= x.tol;
               }});
  c.push_back({"faithful.abs_form", "absolute value", TolKind::algebra, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 const SpectralSplit sp = spectral_split(phi);
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Effect a = x.sampler.random_generalized_effect(x.theory);
                   const Effect b = x.sampler.random_generalized_effect(x.theory);
                   dev = std::max({dev, std::abs(a.coords().dot(sp.gram_abs * b.coords()) - bilinear_form(phi, a, sigma(sp, b))),
                                   std::abs(bilinear_form(phi, a, b) - bilinear_form(phi, b, a))});
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"faithful.sigma_cp", "involution preserves CP", TolKind::algebra, true, [](Context& x) {
                 const SpectralSplit sp = spectral_split(faithful_state(x.spec));
                 double worst = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_cp(x.theory);
                   worst = std::min(worst, eigenvalues_hermitian(conjugate_map(sp, a).choi()).minCoeff());
                 }
                 x.value("min_choi_eigenvalue", worst);
                 return worst >= -x.tol;
               }});
  return c;
}

// ------------------------------------------------------------------ gns

std::vector<CheckDef> gns_checks(const TheorySpec& spec) {
  std::vector<CheckDef> c;
  c.push_back({"gns.positivity", "strict positivity", TolKind::algebra, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 x.value("min_gram_eigenvalue", space.min_gram_eigenvalue());
                 x.value("quotient_dimension", space.quotient_dimension());
                 return space.quotient_dimension() == space.dim();
               }});
  c.push_back({"gns.transpose", "transpose", TolKind::residual, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 double worst = 0.0;
                 for (int k = 0; k < x.samples; ++k) worst = std::max(worst, transpose_map_certified(phi, x.sampler.random_cp(x.theory)).residual);
                 x.value("max_residual", worst);
                 return worst < x.tol;
               }});
  c.push_back({"gns.transpose_axioms", "transposition axioms", TolKind::algebra, true, [](Context& x) {
                 const BipartiteState phi = faithful_state(x.spec);
                 const Transformation id = Transformation::identity(x.theory);
                 double add = 0.0, inv = 0.0, anti = 0.0;
                 const double unit = max_abs(RMatrix(transpose_map(phi, id).schrodinger() - id.schrodinger()));
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   const Transformation ta = transpose_map(phi, a), tb = transpose_map(phi, b);
                   add = std::max(add, max_abs(RMatrix(transpose_map(phi, a + b).schrodinger() - (ta + tb).schrodinger())));
                   inv = std::max(inv, max_abs(RMatrix(transpose_map(phi, ta).schrodinger() - a.schrodinger())));
                   anti = std::max(anti, max_abs(RMatrix(transpose_map(phi, compose(a, b)).schrodinger() - compose(tb, ta).schrodinger())));
                 }
                 x.value("additivity", add);
                 x.value("involution", inv);
                 x.value("anti_multiplicativity", anti);
                 x.value("identity", unit);
                 return std::max({add, inv, anti, unit}) <= x.tol;
               }});
  if (is_max_entangled(spec))
    c.push_back({"gns.transpose_kraus", "transpose", TolKind::algebra, true, [](Context& x) {
                   const int d = x.theory.d();
                   const BipartiteState phi = max_entangled(d);
                   double dev = 0.0;
                   for (int k = 0; k < x.samples; ++k) {
                     const CMatrix v = x.sampler.haar_unitary(3 * d).leftCols(d);
                     const std::vector<CMatrix> kraus{v.topRows(d), v.middleRows(d, d)};
                     std::vector<CMatrix> kt;
                     for (const auto& m : kraus) kt.push_back(m.transpose());
                     CMatrix choi = CMatrix::Zero(d * d, d * d);
                     for (const auto& m : kt) {
                       CVector col(d * d);
                       for (int a = 0; a < d; ++a)
                         for (int i = 0; i < d; ++i) col(a * d + i) = m(i, a);
                       choi += col * col.adjoint();
                     }
                     const Transformation expected = Transformation::from_choi(x.theory, choi, true);
                     dev = std::max(dev, max_abs(RMatrix(transpose_map(phi, Transformation::from_kraus(x.theory, kraus)).schrodinger() -
                                                         expected.schrodinger())));
                   }
                   x.value("max_deviation", dev);
                   return dev <= x.tol;
                 }});
  c.push_back({"gns.conjugation", "complex conjugation", TolKind::algebra, true, [](Context& x) {
                 const SpectralSplit sp = spectral_split(faithful_state(x.spec));
                 double invol = 0.0, hom = 0.0;
                 int inconsistent = 0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   invol = std::max(invol, max_abs(RMatrix(conjugate_map(sp, conjugate_map(sp, a)).schrodinger() - a.schrodinger())));
                   hom = std::max(hom, max_abs(RMatrix(conjugate_map(sp, compose(b, a)).schrodinger() -
                                                       compose(conjugate_map(sp, b), conjugate_map(sp, a)).schrodinger())));
                   if (!conjugation_consistent(sp, a)) ++inconsistent;
                 }
                 x.value("involution", invol);
                 x.value("composition", hom);
                 x.value("inconsistent_with_sigma", inconsistent);
                 return invol == 0.0 && hom <= x.tol && inconsistent == 0;
               }});
  c.push_back({"gns.adjoint_relation", "adjoint", TolKind::probability, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   const Transformation cc = x.sampler.random_generalized(x.theory);
                   const Transformation cd = adjoint_map(space.phi(), space.split(), cc);
                   dev = std::max(dev, std::abs(scalar_product(space, compose(cd, a), b) - scalar_product(space, a, compose(cc, b))));
                 }
                 x.value("max_residual", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"gns.homomorphism", "GNS representation", TolKind::algebra, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 const CMatrix id = gns_rep(space, Transformation::identity(x.theory)).matrix;
                 double hom = max_abs(CMatrix(id - CMatrix::Identity(id.rows(), id.cols())));
                 double left = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const Transformation b = x.sampler.random_generalized(x.theory);
                   const CMatrix pa = gns_rep(space, a).matrix, pb = gns_rep(space, b).matrix;
                   hom = std::max(hom, max_abs(CMatrix(gns_rep(space, compose(a, b)).matrix - pa * pb)));
                   const CVector lhs = space.to_orthonormal(space.vector_of(compose(a, b)));
                   const CVector rhs = pa * space.to_orthonormal(space.vector_of(b));
                   left = std::max(left, (lhs - rhs).cwiseAbs().maxCoeff());
                 }
                 x.value("homomorphism", hom);
                 x.value("left_action", left);
                 return std::max(hom, left) <= x.tol;
               }});
  c.push_back({"gns.rep_adjoint", "GNS representation", TolKind::algebra, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const Transformation a = x.sampler.random_generalized(x.theory);
                   const CMatrix pa = gns_rep(space, a).matrix;
                   dev = std::max(dev, max_abs(CMatrix(gns_rep(space, adjoint_map(space.phi(), space.split(), a)).matrix - pa.adjoint())));
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"gns.cstar", "C*-identity", TolKind::probability, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const auto [lhs, rhs] = cstar_check(space, x.sampler.random_cp(x.theory));
                   dev = std::max(dev, std::abs(lhs - rhs));
                 }
                 const auto [l, r] = cstar_check(space, scale(0.36, Transformation::identity(x.theory)));
                 x.value("max_deviation", dev);
                 x.value("scaled_identity_lhs", l);
                 x.value("scaled_identity_rhs", r);
                 return dev <= x.tol && std::abs(l - r) <= x.tol;
               }});
  return c;
}

// ------------------------------------------------------------------ born

std::vector<CheckDef> born_checks() {
  std::vector<CheckDef> c;
  c.push_back({"born.ic_set", "Born rule", TolKind::probability, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 const Observable obs = minimal_ic_povm(x.theory.d());
                 double dev = 0.0;
                 int n = 0;
                 for (const State& w : spanning_states(x.theory))
                   for (const Effect& e : obs.effects()) {
                     dev = std::max(dev, std::abs(born_pair(space, w, e) - pair(w, e)));
                     ++n;
                   }
                 x.value("max_deviation", dev);
                 x.value("pairs", n);
                 return dev <= x.tol;
               }});
  c.push_back({"born.three_term", "Born rule", TolKind::probability, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k) {
                   const State w = x.sampler.random_state(x.theory);
                   const Effect b = x.sampler.random_effect(x.theory);
                   const Transformation a = x.sampler.random_cp(x.theory);
                   dev = std::max(dev, std::abs(born_three_term(space, w, b, a) - pair(act(a, w), b)));
                 }
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  c.push_back({"born.normalization", "Born rule", TolKind::probability, true, [](Context& x) {
                 const GnsSpace space(faithful_state(x.spec));
                 double dev = 0.0;
                 for (int k = 0; k < x.samples; ++k)
                   dev = std::max(dev, std::abs(born_pair(space, x.sampler.random_state(x.theory), Effect::unit(x.theory)) - 1.0));
                 x.value("max_deviation", dev);
                 return dev <= x.tol;
               }});
  return c;
}

std::vector<CheckDef> checks_for(const TheorySpec& spec, const std::string& suite) {
  if (suite == "core") return core_checks();
  if (suite == "norms") return norm_checks();
  if (suite == "infodim") return infodim_checks();
  if (suite == "table1") return table1_checks(spec);
  if (suite == "faithful") return faithful_checks();
  if (suite == "gns") return gns_checks(spec);
  if (suite == "born") return born_checks();
  if (suite == "all") {
    std::vector<CheckDef> all;
    for (const auto& s : suite_names())
      if (s != "all")
        for (auto& c : checks_for(spec, s)) all.push_back(std::move(c));
    return all;
  }
  std::string known;
  for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  throw UnknownSuite("unknown suite '" + suite + "' (known: " + known + ")");
}

double tolerance(const TheorySpec& spec, TolKind k) {
  switch (k) {
    case TolKind::probability:
      return spec.tol.probability;
    case TolKind::algebra:
      return spec.tol.algebra;
    case TolKind::residual:
      return spec.tol.residual;
  }
  return spec.tol.probability;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

Report run_suite(const TheorySpec& spec, const std::string& suite, const RunOptions& options) {
  const std::vector<CheckDef> defs = checks_for(spec, suite);
  Report report;
  report.suite = suite;
  report.backend = to_string(spec.backend);
  report.d = spec.d;
  report.seed = spec.seed;
  report.version = version();

  const Theory theory = spec.theory();
  for (const auto& def : defs) {
    CheckResult r;
    r.name = def.name;
    r.anchor = def.anchor;
    r.tolerance = tolerance(spec, def.tol);
    if (spec.backend == Backend::classical && classical_violation(def.name)) r.expected_fail = true;

    const auto start = std::chrono::steady_clock::now();
    if (def.quantum_only && spec.backend != Backend::quantum) {
      r.status = Status::error;
      r.message = "requires the quantum backend";
    } else {
      Context ctx{spec, theory, Sampler(check_seed(spec.seed, def.name)), r.tolerance, options.samples, {}, {}};
      try {
        r.status = def.run(ctx) ? Status::pass : Status::fail;
        r.message = ctx.message;
      } catch (const NotFaithful& e) {
        r.status = Status::fail;
        r.message = one_line(e.what());
      } catch (const DegenerateSplit& e) {
        r.status = Status::fail;
        r.message = one_line(e.what());
      } catch (const NotSymmetric& e) {
        r.status = Status::fail;
        r.message = one_line(e.what());
      } catch (const std::exception& e) {
        r.status = Status::error;
        r.message = one_line(e.what());
      }
      r.values = std::move(ctx.values);
    }
    if (options.timing)
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace gpt::cli
