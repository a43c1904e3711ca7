#include "dirac/homogeneous.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace dirac {

Checklist validate_classification(const ClassificationData& data, const DiracManinTriple& t) {
  Checklist cl;
  std::size_t nd = data.n.dim();
  JacobiReport jac = check_jacobi(data.n);
  cl.add("n satisfies Jacobi", jac.ok,
         jac.ok ? ""
                : "triple (" + std::to_string(jac.i) + "," + std::to_string(jac.j) + "," +
                      std::to_string(jac.k) + ") defect " + vec_str(jac.defect));
  bool nondeg = data.metric_n.nondegenerate();
  cl.add("gamma_n nondegenerate", nondeg);
  cl.add("gamma_n ad-invariant", metric_ad_invariant(data.n, data.metric_n));

  cl.add("u subalgebra", is_subalgebra(data.n, data.u));
  bool lag = nondeg && orth_complement(data.u, data.metric_n) == data.u;
  cl.add("u Lagrangian", lag,
         lag ? "" : "u^perp has dim " + std::to_string(orth_complement(data.u, data.metric_n).dim()));

  cl.add("k inside u", data.u.contains(data.k));
  cl.add("k subalgebra", is_subalgebra(data.n, data.k));
  // infinitesimal K-invariance of u
  bool k_inv_u = true;
  for (std::size_t a = 0; a < data.k.dim() && k_inv_u; ++a)
    for (std::size_t b = 0; b < data.u.dim(); ++b)
      if (!data.u.contains(data.n.bracket(data.k.basis_vector(a), data.u.basis_vector(b)))) {
        k_inv_u = false;
        break;
      }
  cl.add("[k, u] inside u", k_inv_u);

  bool morph = data.f_n.rows() == t.dim() && data.f_n.cols() == nd &&
               check_morphism(data.n, t.d, data.f_n);
  cl.add("f_n Lie morphism", morph);
  if (nondeg && morph) {
    SymBivector gamma_n(*data.metric_n.gram().inverse());
    bool push = pushforward(data.f_n, gamma_n) == t.beta;
    cl.add("f_n(gamma_n) = beta", push,
           push ? "" : "pushforward gram " + pushforward(data.f_n, gamma_n).gram().str());
  } else {
    cl.add("f_n(gamma_n) = beta", false, "prerequisites failed");
  }
  Subspace fk = image(data.f_n, data.k);
  cl.add("f_n(k) inside h", t.h.contains(fk));
  cl.add("f_n injective on k", fk.dim() == data.k.dim());

  for (std::size_t s = 0; s < data.samples.size(); ++s) {
    const KSample& ks = data.samples[s];
    std::string tag = "sample " + std::to_string(s);
    bool an_auto = ks.a_n.rows() == nd && ks.a_n.cols() == nd && ks.a_n.inverse().has_value() &&
                   check_morphism(data.n, data.n, ks.a_n);
    cl.add(tag + ": A_n in Aut(n)", an_auto);
    cl.add(tag + ": A_n preserves gamma_n",
           an_auto && ks.a_n.transpose() * data.metric_n.gram() * ks.a_n == data.metric_n.gram());
    cl.add(tag + ": A_n preserves u", an_auto && image(ks.a_n, data.u) == data.u);
    cl.add(tag + ": A_n preserves k", an_auto && image(ks.a_n, data.k) == data.k);
    bool ad_auto = ks.a_d.rows() == t.dim() && ks.a_d.cols() == t.dim() &&
                   ks.a_d.inverse().has_value() && check_morphism(t.d, t.d, ks.a_d);
    cl.add(tag + ": A_d in Aut(d)", ad_auto);
    cl.add(tag + ": A_d preserves beta", ad_auto && pushforward(ks.a_d, t.beta) == t.beta);
    cl.add(tag + ": A_d preserves h", ad_auto && image(ks.a_d, t.h) == t.h);
    cl.add(tag + ": f_n equivariant", an_auto && ad_auto && data.f_n * ks.a_n == ks.a_d * data.f_n);
  }
  return cl;
}

Checklist validate_la(const LAClassData& data, const DiracManinTriple& t) {
  Checklist cl;
  cl.add("u satisfies Jacobi", check_jacobi(data.u_alg).ok);
  cl.add("k subalgebra", is_subalgebra(data.u_alg, data.k));
  bool morph = data.f_u.rows() == t.dim() && data.f_u.cols() == data.u_alg.dim() &&
               check_morphism(data.u_alg, t.d, data.f_u);
  cl.add("f_u Lie morphism", morph);
  Subspace fk = image(data.f_u, data.k);
  cl.add("f_u(k) inside h", t.h.contains(fk));
  cl.add("f_u injective on k", fk.dim() == data.k.dim());
  for (std::size_t s = 0; s < data.samples.size(); ++s) {
    const KSample& ks = data.samples[s];
    std::string tag = "sample " + std::to_string(s);
    cl.add(tag + ": A_u in Aut(u)", check_morphism(data.u_alg, data.u_alg, ks.a_n));
    cl.add(tag + ": A_u preserves k", image(ks.a_n, data.k) == data.k);
    cl.add(tag + ": A_d in Aut(d)", check_morphism(t.d, t.d, ks.a_d));
    cl.add(tag + ": f_u equivariant", data.f_u * ks.a_n == ks.a_d * data.f_u);
  }
  return cl;
}

Mat build_F_n(const ClassificationData& data, const DiracManinTriple& t, const QPair& qp) {
  auto gn_inv = data.metric_n.gram().inverse();
  if (!gn_inv) throw Error("build_F_n: metric on n is degenerate");
  Mat u_in_q = qp.g_embed * g_coordinate_projection(t) * data.f_n;  // n -> q
  Mat f = *gn_inv * u_in_q.transpose() * qp.q.metric.gram();
  // F_n vanishes on g
  if (!(f * qp.g_embed).is_zero()) throw Error("build_F_n: F_n does not vanish on g (internal)");
  return f;
}

LinearModule classification_module(const ClassificationData& data, const DiracManinTriple& t,
                                   const QPair& qp, const MetrizedLinearGroupoid& mg) {
  Mat u_in_q = qp.g_embed * g_coordinate_projection(t) * data.f_n;
  return moment_to_action(mg, data.n.dim(), data.metric_n, u_in_q);
}

NormalForm::NormalForm(ClassificationData data, const SemidirectContext& ctx)
    : data_(std::move(data)), ctx_(&ctx) {
  big_f_ = build_F_n(data_, ctx.triple, ctx.qp);
  u_in_q_ = ctx.qp.g_embed * g_coordinate_projection(ctx.triple) * data_.f_n;
}

Vec NormalForm::moment(const GroupElement& h, const Vec& zeta) const {
  return ehat_moment(ctx_->triple, h, data_.f_n * zeta);
}

Vec NormalForm::moment_in_q(const GroupElement& h, const Vec& zeta) const {
  return ctx_->qp.g_embed * (g_coordinate_projection(ctx_->triple) * moment(h, zeta));
}

bool NormalForm::composable(const SemidirectElement& a, const GroupElement& h,
                            const Vec& zeta) const {
  return sd_source(*ctx_, a) == moment_in_q(h, zeta);
}

std::pair<GroupElement, Vec> NormalForm::action(const SemidirectElement& a, const GroupElement& h,
                                                const Vec& zeta) const {
  if (!composable(a, h, zeta)) throw Error("normal form action: not composable");
  Vec shifted = bullet_on_q(*ctx_, group_inverse(h), a.lambda);
  return {group_product(ctx_->triple, ctx_->rep, a.h, h), zeta + big_f_ * shifted};
}

Vec NormalForm::anchor(const GroupElement& h, const Vec& zeta) const {
  return dressing_field(ctx_->triple, h, data_.f_n * zeta);
}

FiberReduction reduce_fibers(const ClassificationData& data) {
  std::size_t nd = data.n.dim();
  Subspace kperp = orth_complement(data.k, data.metric_n);
  if (!kperp.contains(data.k)) throw Error("reduce_fibers: k is not isotropic");
  if (!kperp.contains(data.u)) throw Error("reduce_fibers: u does not survive the reduction");

  const Mat& kb = kperp.basis();
  std::vector<Vec> k_coords;
  for (std::size_t i = 0; i < data.k.dim(); ++i)
    k_coords.push_back(kperp.coordinates(data.k.basis_vector(i)));
  QuotientSpace qs = quotient(kperp.dim(), Subspace::span(kperp.dim(), k_coords));

  FiberReduction out;
  out.p_dim = qs.dim();
  if (out.p_dim != nd - 2 * data.k.dim())
    throw Error("reduce_fibers: dim p != dim n - 2 dim k (k^perp mis-specified)");
  out.embed = kb.transpose() * qs.section;
  Mat coord = *(kb * kb.transpose()).inverse() * kb;
  out.project = qs.projection * coord;

  Mat gram(out.p_dim, out.p_dim);
  for (std::size_t i = 0; i < out.p_dim; ++i)
    for (std::size_t j = i; j < out.p_dim; ++j)
      gram.at(i, j) = gram.at(j, i) = data.metric_n.eval(out.embed.col(i), out.embed.col(j));
  out.metric_p = SymBilinearForm(gram);
  if (!out.metric_p.nondegenerate())
    throw Error("reduce_fibers: metric fails to descend (k^perp mis-specified)");

  // the bracket descends when k^perp is a subalgebra with [k^perp, k] in k
  bool closes = is_subalgebra(data.n, kperp);
  if (closes)
    for (std::size_t a = 0; a < kperp.dim() && closes; ++a)
      for (std::size_t b = 0; b < data.k.dim(); ++b)
        if (!data.k.contains(
                data.n.bracket(kperp.basis_vector(a), data.k.basis_vector(b)))) {
          closes = false;
          break;
        }
  if (closes) {
    std::vector<BracketRule> rules;
    for (std::size_t i = 0; i < out.p_dim; ++i)
      for (std::size_t j = i + 1; j < out.p_dim; ++j)
        rules.push_back({i, j, out.project * data.n.bracket(out.embed.col(i), out.embed.col(j))});
    out.algebra_p = LieAlgebra(out.p_dim, rules);
  }

  std::vector<Vec> l_rows;
  for (std::size_t i = 0; i < data.u.dim(); ++i)
    l_rows.push_back(out.project * data.u.basis_vector(i));
  out.l = Subspace::span(out.p_dim, l_rows);
  if (orth_complement(out.l, out.metric_p) != out.l)
    throw Error("reduce_fibers: l is not Lagrangian in p (invalid data)");
  return out;
}

bool check_transitive(const ClassificationData& data, const DiracManinTriple& t) {
  Subspace fu = image(data.f_n, data.u);
  if (fu.dim() != data.u.dim()) return false;  // not injective on u
  return intersect(fu, t.h) == image(data.f_n, data.k);
}

ClassificationData robinson_build(const RobinsonDatum& datum, const DiracManinTriple& t) {
  if (!is_subalgebra(t.d, datum.c)) throw Error("robinson_build: c is not a subalgebra");
  if (!is_coisotropic(datum.c, t.beta)) throw Error("robinson_build: c is not beta-coisotropic");
  if (intersect(datum.c, t.h) != datum.k) throw Error("robinson_build: c cap h != k");
  for (const auto& s : datum.samples) {
    if (image(s.a_d, datum.c) != datum.c)
      throw Error("robinson_build: a sample does not preserve c");
  }

  Double dbl = build_double(t.d, t.beta);
  std::size_t nd = t.dim();
  Subspace chat = preimage(dbl.s_map, datum.c);
  Reduced red = reduce_coisotropic(dbl.dtilde, chat);

  ClassificationData out;
  out.n = red.algebra().algebra;
  out.metric_n = red.algebra().metric;

  auto embed_d = [&](const Vec& v) {
    Vec amb(2 * nd, Rat(0));
    for (std::size_t i = 0; i < nd; ++i) amb[i] = v[i];
    return amb;
  };
  std::vector<Vec> u_rows, k_rows;
  for (std::size_t i = 0; i < datum.c.dim(); ++i)
    u_rows.push_back(red.project(embed_d(datum.c.basis_vector(i))));
  for (std::size_t i = 0; i < datum.k.dim(); ++i)
    k_rows.push_back(red.project(embed_d(datum.k.basis_vector(i))));
  out.u = Subspace::span(out.n.dim(), u_rows);
  out.k = Subspace::span(out.n.dim(), k_rows);

  // f_n = descent of t; t vanishes on the radical since d* lies in c-hat
  for (std::size_t i = 0; i < red.perp().dim(); ++i)
    if (!is_zero(dbl.t_map * red.perp().basis_vector(i)))
      throw Error("robinson_build: t does not vanish on the radical (internal)");
  out.f_n = dbl.t_map * red.embed_mat();

  // dimension bookkeeping from the reduction
  if (out.n.dim() != datum.c.dim() + nd - red.perp().dim())
    throw Error("robinson_build: dimension bookkeeping failed (internal)");

  for (const auto& s : datum.samples) {
    Mat a_dual = s.a_d.inverse()->transpose();
    Mat a_tilde(2 * nd, 2 * nd);
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j) {
        a_tilde.at(i, j) = s.a_d.at(i, j);
        a_tilde.at(nd + i, nd + j) = a_dual.at(i, j);
      }
    Mat a_n(out.n.dim(), out.n.dim());
    for (std::size_t j = 0; j < out.n.dim(); ++j) {
      Vec e(out.n.dim(), Rat(0));
      e[j] = 1;
      Vec img = red.project(a_tilde * red.embed(e));
      for (std::size_t i = 0; i < out.n.dim(); ++i) a_n.at(i, j) = img[i];
    }
    out.samples.push_back({a_n, s.a_d, s.rep_matrix});
  }

  Checklist cl = validate_classification(out, t);
  if (!cl.ok()) throw Error("robinson_build: output fails validation (internal)");
  if (!check_transitive(out, t)) throw Error("robinson_build: output not transitive (internal)");
  return out;
}

Checklist verify_robinson_iso(const ClassificationData& data, const DiracManinTriple& t) {
  Checklist cl;
  std::size_t nd = data.n.dim(), dd = t.dim();
  Subspace c = image(data.f_n, data.u);

  Double dbl = build_double(t.d, t.beta);
  Subspace chat = preimage(dbl.s_map, c);
  Reduced red = reduce_coisotropic(dbl.dtilde, chat);
  cl.add("reduction has the same dimension", red.dim() == nd);

  // decomposition x = zeta + f_n*(mu) with zeta in u, mu in d*
  Mat f_star = *data.metric_n.gram().inverse() * data.f_n.transpose();  // d* -> n
  Mat solver = data.u.basis().transpose().hstack(f_star);               // n x (ku + d)
  std::size_t ku = data.u.dim();

  auto to_chat = [&](const Vec& sol) {
    // (a; mu) -> the c-hat vector (f_n(u a), mu)
    Vec zeta = data.u.basis().transpose() * slice(sol, 0, ku);
    Vec fz = data.f_n * zeta;
    Vec mu = slice(sol, ku, ku + dd);
    Vec amb(2 * dd, Rat(0));
    for (std::size_t i = 0; i < dd; ++i) {
      amb[i] = fz[i];
      amb[dd + i] = mu[i];
    }
    return amb;
  };

  // well-definedness: the ambiguity of the decomposition dies in the radical
  bool well_defined = true;
  Mat ker = solver.nullspace();
  for (std::size_t i = 0; i < ker.rows(); ++i)
    if (!red.perp().contains(to_chat(ker.row(i)))) {
      well_defined = false;
      break;
    }
  cl.add("comparison map well-defined", well_defined);

  Mat psi(nd, nd);
  bool solvable = true;
  for (std::size_t j = 0; j < nd; ++j) {
    Vec e(nd, Rat(0));
    e[j] = 1;
    auto sol = solver.solve(e);
    if (!sol) {
      solvable = false;
      break;
    }
    Vec img = red.project(to_chat(*sol));
    for (std::size_t i = 0; i < nd; ++i) psi.at(i, j) = img[i];
  }
  cl.add("ran(f_n*) + u = n", solvable);
  if (!solvable || !well_defined) return cl;

  cl.add("comparison map bijective", psi.rank() == nd);
  cl.add("comparison map is a Lie morphism", check_morphism(data.n, red.algebra().algebra, psi));
  cl.add("comparison map isometric",
         psi.transpose() * red.algebra().metric.gram() * psi == data.metric_n.gram());
  cl.add("comparison map sends u to the embedded c",
         image(psi, data.u) == [&] {
           std::vector<Vec> rows;
           for (std::size_t i = 0; i < c.dim(); ++i) {
             Vec amb(2 * dd, Rat(0));
             Vec cb = c.basis_vector(i);
             for (std::size_t a = 0; a < dd; ++a) amb[a] = cb[a];
             rows.push_back(red.project(amb));
           }
           return Subspace::span(nd, rows);
         }());
  return cl;
}

ExactCaseResult check_exact_case(const ClassificationData& data, const DiracManinTriple& t) {
  TripleReport rep = validate_triple(t);
  if (!rep.exact) throw Error("check_exact_case: triple is not exact");
  ExactCaseResult out;
  out.ok = data.n.dim() == t.dim() && data.f_n.inverse().has_value();
  if (out.ok) out.c = image(data.f_n, data.u);
  return out;
}

Vec la_moment(const LAClassData& data, const DiracManinTriple& t, const GroupElement& h,
              const Vec& zeta) {
  return ehat_moment(t, h, data.f_u * zeta);
}

namespace {

bool admissible(const DiracManinTriple& t, const Subspace& c, const SearchConstraints& cons) {
  if (cons.dim && c.dim() != *cons.dim) return false;
  if (!is_subalgebra(t.d, c)) return false;
  if (!is_coisotropic(c, t.beta)) return false;
  if (cons.lagrangian) {
    if (!t.beta.nondegenerate()) return false;
    SymBilinearForm metric(*t.beta.gram().inverse());
    if (orth_complement(c, metric) != c) return false;
  }
  // a default-constructed k means the zero requirement
  Subspace want = cons.k.ambient_dim() == 0 ? Subspace::zero(t.dim()) : cons.k;
  if (want.ambient_dim() != t.dim()) throw Error("search_coisotropic: k dimension mismatch");
  if (intersect(c, t.h) != want) return false;
  for (const auto& a : cons.samples)
    if (image(a, c) != c) return false;
  return true;
}

std::vector<Subspace> dedupe_in_order(std::vector<std::pair<std::uint64_t, Subspace>>& found) {
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Subspace> out;
  for (auto& [mask, s] : found) {
    bool seen = false;
    for (const auto& prev : out)
      if (prev == s) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Subspace> search_coisotropic_serial(const DiracManinTriple& t,
                                                const std::vector<Vec>& candidates,
                                                const SearchConstraints& cons) {
  std::size_t m = candidates.size();
  if (m == 0) return {};
  if (m > 24) throw Error("search_coisotropic: candidate list too large");
  std::vector<std::pair<std::uint64_t, Subspace>> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t(1) << i)) gens.push_back(candidates[i]);
    Subspace c = Subspace::span(t.dim(), gens);
    if (admissible(t, c, cons)) found.emplace_back(mask, std::move(c));
  }
  return dedupe_in_order(found);
}

std::vector<Subspace> search_coisotropic_parallel(const DiracManinTriple& t,
                                                  const std::vector<Vec>& candidates,
                                                  const SearchConstraints& cons) {
  std::size_t m = candidates.size();
  if (m == 0) return {};
  if (m > 24) throw Error("search_coisotropic: candidate list too large");
  std::int64_t total = std::int64_t(1) << m;
  std::vector<std::pair<std::uint64_t, Subspace>> found;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, Subspace>> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t mask = 1; mask < total; ++mask) {
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::int64_t(1) << i)) gens.push_back(candidates[i]);
      Subspace c = Subspace::span(t.dim(), gens);
      if (admissible(t, c, cons)) local.emplace_back(std::uint64_t(mask), std::move(c));
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
#else
  for (std::int64_t mask = 1; mask < total; ++mask) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::int64_t(1) << i)) gens.push_back(candidates[i]);
    Subspace c = Subspace::span(t.dim(), gens);
    if (admissible(t, c, cons)) found.emplace_back(std::uint64_t(mask), std::move(c));
  }
#endif
  return dedupe_in_order(found);
}

std::vector<Subspace> search_coisotropic(const DiracManinTriple& t,
                                         const std::vector<Vec>& candidates,
                                         const SearchConstraints& cons) {
  if (candidates.size() >= 10) return search_coisotropic_parallel(t, candidates, cons);
  return search_coisotropic_serial(t, candidates, cons);
}

}  // namespace dirac
