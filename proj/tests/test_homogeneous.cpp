#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac/catalog.hpp"
#include "dirac/homogeneous.hpp"
#include "test_support.hpp"

using namespace dirac;
using dirac::testing::Gen;

namespace {

// the tautological datum: n = the double itself, u = d, k = 0, f_n = t
ClassificationData trivial_datum(const DiracManinTriple& t) {
  Double dbl = build_double(t.d, t.beta);
  std::size_t nd = t.dim();
  std::vector<Vec> d_rows;
  for (std::size_t i = 0; i < nd; ++i) {
    Vec v(2 * nd, Rat(0));
    v[i] = 1;
    d_rows.push_back(v);
  }
  ClassificationData data;
  data.n = dbl.dtilde.algebra;
  data.metric_n = dbl.dtilde.metric;
  data.u = Subspace::span(2 * nd, d_rows);
  data.k = Subspace::zero(2 * nd);
  data.f_n = dbl.t_map;
  return data;
}

Mat first_slot(const Mat& a) {
  Mat m = Mat::identity(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = a.at(i, j);
  return m;
}

Mat both_slots(const Mat& a) {
  Mat m = Mat::identity(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(2 + i, 2 + j) = a.at(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("validate_classification: trivial datum and perturbations") {
  DiracManinTriple t = fixture_E1();
  ClassificationData data = trivial_datum(t);
  CHECK(validate_classification(data, t).ok());

  // u not Lagrangian
  ClassificationData bad_u = data;
  bad_u.u = Subspace::span(4, {Vec{Rat(1), Rat(0), Rat(0), Rat(0)}});
  Checklist cl = validate_classification(bad_u, t);
  CHECK(!cl.ok());
  for (const auto& c : cl.items)
    if (c.name == "u Lagrangian") CHECK(!c.pass);

  // f_n scaled by 2 breaks the pushforward identity
  ClassificationData bad_f = data;
  bad_f.f_n = data.f_n * Rat(2);
  Checklist cl2 = validate_classification(bad_f, t);
  CHECK(!cl2.ok());
  for (const auto& c : cl2.items)
    if (c.name == "f_n(gamma_n) = beta") CHECK(!c.pass);
}

TEST_CASE("build_F_n on the trivial datum") {
  DiracManinTriple t = fixture_E1();
  ClassificationData data = trivial_datum(t);
  QPair qp = build_q_pair(t);
  Mat f = build_F_n(data, t, qp);
  CHECK(f.rows() == data.n.dim());
  CHECK(f.cols() == qp.q.dim());
  CHECK((f * qp.g_embed).is_zero());  // vanishes on g
  // linearity is matrix linearity; spot-check additivity
  Gen gen(311);
  Vec l1 = gen.vec(qp.q.dim()), l2 = gen.vec(qp.q.dim());
  CHECK(f * (l1 + l2) == f * l1 + f * l2);
}

TEST_CASE("classification data of robinson_build") {
  for (bool use_e2 : {false, true}) {
    DiracManinTriple t = use_e2 ? fixture_E2() : fixture_E1();
    RobinsonDatum datum{t.g, Subspace::zero(2), {}};
    ClassificationData data = robinson_build(datum, t);
    CHECK(data.n.dim() == 2);
    CHECK(data.u.dim() == 1);
    CHECK(validate_classification(data, t).ok());
    CHECK(check_transitive(data, t));
    // exactness recovers c
    ExactCaseResult ex = check_exact_case(data, t);
    CHECK(ex.ok);
    CHECK(ex.c == t.g);
  }
}

TEST_CASE("robinson_build with c = d (full coisotropic)") {
  DiracManinTriple t = fixture_E1();
  RobinsonDatum datum{Subspace::full(2), t.h, {}};  // c cap h = h
  ClassificationData data = robinson_build(datum, t);
  CHECK(data.n.dim() == 4);  // radical is zero, full semidirect product
  CHECK(data.k.dim() == 1);
  CHECK(validate_classification(data, t).ok());
  CHECK(check_transitive(data, t));
}

TEST_CASE("robinson_build rejects bad data") {
  DiracManinTriple t = fixture_E2();
  // c not coisotropic: span(1,0) has beta(ann,ann) = -1
  CHECK_THROWS_AS(
      robinson_build({Subspace::span(2, {Vec{Rat(1), Rat(0)}}), Subspace::zero(2), {}}, t),
      Error);
  // wrong k
  CHECK_THROWS_AS(robinson_build({t.g, t.h, {}}, t), Error);
}

TEST_CASE("robinson comparison map is an isometric Lie isomorphism") {
  // Robinson-built data (both Lagrangians of E2), trivial datum, and the
  // full c = d case
  DiracManinTriple e2 = fixture_E2();
  for (const auto& c :
       {Subspace::span(2, {Vec{Rat(1), Rat(1)}}), Subspace::span(2, {Vec{Rat(1), Rat(-1)}})}) {
    ClassificationData data = robinson_build({c, Subspace::zero(2), {}}, e2);
    CHECK(verify_robinson_iso(data, e2).ok());
  }
  DiracManinTriple e1 = fixture_E1();
  CHECK(verify_robinson_iso(trivial_datum(e1), e1).ok());
  ClassificationData full = robinson_build({Subspace::full(2), e1.h, {}}, e1);
  CHECK(verify_robinson_iso(full, e1).ok());
}

TEST_CASE("robinson round-trip on the sl2 Cartan-Dirac triple") {
  DiracManinTriple t = fixture_sl2_cartan_dirac();
  // K-sample: simultaneous conjugation preserves the diagonal c = g
  MatrixRep rep = doubled_rep(sl2_defining_rep());
  Mat krep = both_slots(Mat::from_strings({{"2", "0"}, {"0", "1/2"}}));
  Mat a_d = adjoint_matrix(rep, krep);
  RobinsonDatum datum{t.g, Subspace::zero(6), {{a_d, krep}}};
  ClassificationData data = robinson_build(datum, t);
  CHECK(data.n.dim() == 6);
  CHECK(validate_classification(data, t).ok());
  CHECK(check_transitive(data, t));
  CHECK(verify_robinson_iso(data, t).ok());
  ExactCaseResult ex = check_exact_case(data, t);
  CHECK(ex.ok);
  CHECK(ex.c == t.g);
}

TEST_CASE("check_exact_case") {
  DiracManinTriple e1 = fixture_E1();
  // the trivial datum has dim n = 2 dim d: not the exact normal form
  CHECK(!check_exact_case(trivial_datum(e1), e1).ok);
  // non-exact triples are rejected outright
  DiracManinTriple e3 = fixture_E3_nonexact();
  CHECK_THROWS_AS(check_exact_case(trivial_datum(e3), e3), Error);
}

TEST_CASE("check_transitive counterexamples") {
  DiracManinTriple t = fixture_E1();
  ClassificationData data = trivial_datum(t);
  // the trivial datum is not transitive: f_n(u) cap h = h but f_n(k) = 0
  CHECK(!check_transitive(data, t));

  // f_n|u = 0 with u nonzero
  ClassificationData zero_f = data;
  zero_f.f_n = Mat(2, 4);
  CHECK(!check_transitive(zero_f, t));
}

TEST_CASE("reduce_fibers") {
  DiracManinTriple t = fixture_E1();
  // k = 0 leaves everything unchanged
  ClassificationData data = trivial_datum(t);
  FiberReduction r0 = reduce_fibers(data);
  CHECK(r0.p_dim == 4);
  CHECK(r0.l == data.u);

  // dim k = 1 inside the 4-dim n, via the Robinson c = d datum
  ClassificationData full = robinson_build({Subspace::full(2), t.h, {}}, t);
  FiberReduction r1 = reduce_fibers(full);
  CHECK(r1.p_dim == 2);
  CHECK(r1.l.dim() == 1);
  CHECK(orth_complement(r1.l, r1.metric_p) == r1.l);  // Lagrangian
  CHECK(r1.metric_p.nondegenerate());

  // k = u collapses to the zero space
  ClassificationData collapse = data;
  collapse.k = data.u;
  FiberReduction r2 = reduce_fibers(collapse);
  CHECK(r2.p_dim == 0);

  // non-isotropic k is rejected
  ClassificationData bad = data;
  bad.k = Subspace::span(4, {Vec{Rat(1), Rat(0), Rat(1), Rat(0)}});  // <v,v> = 2
  CHECK_THROWS_AS(reduce_fibers(bad), Error);
}

TEST_CASE("normal form: module laws over the semidirect product") {
  DiracManinTriple t = fixture_sl2_cartan_dirac();
  MatrixRep rep = doubled_rep(sl2_defining_rep());
  SemidirectContext ctx = make_semidirect_context(t, rep);

  Mat krep = both_slots(Mat::from_strings({{"2", "0"}, {"0", "1/2"}}));
  Mat a_d = adjoint_matrix(rep, krep);
  ClassificationData data = robinson_build({t.g, Subspace::zero(6), {{a_d, krep}}}, t);
  NormalForm nf(data, ctx);

  std::vector<GroupElement> elts = {
      make_group_element(t, rep, Mat::identity(4)),
      make_group_element(t, rep, first_slot(Mat::from_strings({{"1", "1"}, {"0", "1"}}))),
      make_group_element(t, rep, first_slot(Mat::from_strings({{"2", "3"}, {"1", "2"}})))};

  Gen gen(313);
  std::size_t qd = ctx.qp.q.dim(), nd = data.n.dim();
  for (const auto& h : elts) {
    Vec zeta = gen.vec(nd);
    // composable (g, lambda): lambda = moment + ker(s) vectors
    Vec base = nf.moment_in_q(h, zeta);
    for (const auto& g_elt : elts) {
      for (std::size_t i = 0; i <= ctx.mg.gpd.ker_s.dim(); ++i) {
        Vec lambda = base;
        if (i > 0) lambda = lambda + ctx.mg.gpd.ker_s.basis_vector(i - 1);
        SemidirectElement a{g_elt, lambda};
        REQUIRE(nf.composable(a, h, zeta));
        auto [h2, zeta2] = nf.action(a, h, zeta);
        // u_P(x o y) = t(x)
        CHECK(nf.moment_in_q(h2, zeta2) == sd_target(ctx, a));
        // metric preservation: the bullet preserves the q-metric, so the
        // fiber law reads <zeta', zeta'> = <zeta, zeta> + <lambda, lambda>
        CHECK(data.metric_n.eval(zeta2, zeta2) ==
              data.metric_n.eval(zeta, zeta) + ctx.qp.q.metric.eval(lambda, lambda));
      }
    }
  }

  // unit law: the unit over the moment acts trivially
  GroupElement id = make_group_element(t, rep, Mat::identity(4));
  Vec zeta = gen.vec(nd);
  SemidirectElement unit{id, nf.moment_in_q(id, zeta)};
  auto [hu, zu] = nf.action(unit, id, zeta);
  CHECK(zu == zeta);
  CHECK(hu.matrix == Mat::identity(4));

  // associativity against the semidirect composition
  for (const auto& g1 : elts)
    for (const auto& g2 : elts) {
      Vec z = gen.vec(nd);
      Vec lam2 = nf.moment_in_q(elts[1], z) + ctx.mg.gpd.ker_s.basis_vector(0);
      SemidirectElement b{g2, lam2};
      Vec lam1 = sd_target(ctx, b) + ctx.mg.gpd.ker_s.basis_vector(1);
      SemidirectElement a{g1, lam1};
      REQUIRE(sd_composable(ctx, a, b));
      auto [hb, zb] = nf.action(b, elts[1], z);
      auto lhs = nf.action(sd_compose(ctx, a, b), elts[1], z);
      auto rhs = nf.action(a, hb, zb);
      CHECK(lhs.first.matrix == rhs.first.matrix);
      CHECK(lhs.second == rhs.second);
    }
}

TEST_CASE("normal form: K-descent and anchor consistency") {
  DiracManinTriple t = fixture_sl2_cartan_dirac();
  MatrixRep rep = doubled_rep(sl2_defining_rep());
  SemidirectContext ctx = make_semidirect_context(t, rep);

  Mat krep = both_slots(Mat::from_strings({{"2", "0"}, {"0", "1/2"}}));
  Mat a_d = adjoint_matrix(rep, krep);
  ClassificationData data = robinson_build({t.g, Subspace::zero(6), {{a_d, krep}}}, t);
  NormalForm nf(data, ctx);
  REQUIRE(data.samples.size() == 1);
  const Mat& a_n = data.samples[0].a_n;
  GroupElement k_elt = make_group_element(t, rep, krep);

  GroupElement h = make_group_element(
      t, rep, first_slot(Mat::from_strings({{"1", "1"}, {"0", "1"}})));
  GroupElement g_elt = make_group_element(
      t, rep, first_slot(Mat::from_strings({{"2", "3"}, {"1", "2"}})));

  Gen gen(317);
  Vec zeta = gen.vec(data.n.dim());

  // descent: (h, zeta) -> (h k^{-1}, A_n zeta) leaves moment and action
  // values in the same class
  GroupElement hk = group_product(t, rep, h, group_inverse(k_elt));
  Vec kz = a_n * zeta;
  CHECK(nf.moment_in_q(hk, kz) == nf.moment_in_q(h, zeta));

  Vec lambda = nf.moment_in_q(h, zeta) + ctx.mg.gpd.ker_s.basis_vector(2);
  SemidirectElement a{g_elt, lambda};
  auto [h1, z1] = nf.action(a, h, zeta);
  auto [h2, z2] = nf.action(a, hk, kz);
  CHECK(h2.matrix == h1.matrix * k_elt.matrix_inv);
  CHECK(z2 == a_n * z1);

  // anchor consistency: the lift identity tau + Ad_{h^{-1}} xi = f_n(zeta)
  for (const auto& elt : {h, g_elt, k_elt}) {
    Vec tau = nf.anchor(elt, zeta);
    Vec xi = nf.moment(elt, zeta);
    CHECK(th_g_lift(t, elt, tau, xi) == nf.f_n() * zeta);
    CHECK(tau == dressing_field(t, elt, nf.f_n() * zeta));
  }
}

TEST_CASE("classification module matches the moment-to-action machinery") {
  DiracManinTriple t = fixture_E2();
  QPair qp = build_q_pair(t);
  MetrizedLinearGroupoid mg = groupoid_of_qpair(qp);
  ClassificationData data = robinson_build({t.g, Subspace::zero(2), {}}, t);
  LinearModule m = classification_module(data, t, qp, mg);  // checks run inside
  CHECK(m.p_dim == data.n.dim());
  CHECK(m.core_act == build_F_n(data, t, qp));
}

TEST_CASE("la_moment") {
  DiracManinTriple t = fixture_E1();
  MatrixRep rep{t.d, 2,
                {Mat::from_strings({{"1", "0"}, {"0", "0"}}),
                 Mat::from_strings({{"0", "0"}, {"0", "1"}})}};
  GroupElement id = make_group_element(t, rep, Mat::identity(2));

  // u = d, f_u = identity: moment at e is pr_g
  LAClassData lad{t.d, Subspace::zero(2), Mat::identity(2), {}};
  CHECK(validate_la(lad, t).ok());
  Gen gen(331);
  Vec zeta = gen.vec(2);
  CHECK(la_moment(lad, t, id, zeta) == pr_g(t) * zeta);

  // zeta in k maps into h and dies under pr_g
  LAClassData lad2{LieAlgebra::abelian(1), Subspace::full(1), t.h.basis().transpose(), {}};
  CHECK(validate_la(lad2, t).ok());
  CHECK(is_zero(la_moment(lad2, t, id, Vec{Rat(7)})));
}

TEST_CASE("search_coisotropic on E2") {
  DiracManinTriple t = fixture_E2();
  std::vector<Vec> candidates = {Vec{Rat(1), Rat(1)}, Vec{Rat(1), Rat(-1)}, Vec{Rat(1), Rat(0)},
                                 Vec{Rat(0), Rat(1)}};
  SearchConstraints cons;
  cons.lagrangian = true;
  cons.dim = 1;
  cons.k = Subspace::zero(2);
  std::vector<Subspace> found = search_coisotropic_serial(t, candidates, cons);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == Subspace::span(2, {Vec{Rat(1), Rat(1)}}));
  CHECK(found[1] == Subspace::span(2, {Vec{Rat(1), Rat(-1)}}));

  // brute-force oracle over all 2^4 - 1 subset spans
  std::vector<Subspace> oracle;
  SymBilinearForm metric(*t.beta.gram().inverse());
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) gens.push_back(candidates[i]);
    Subspace c = Subspace::span(2, gens);
    if (c.dim() != 1) continue;
    if (!is_subalgebra(t.d, c) || !is_coisotropic(c, t.beta)) continue;
    if (orth_complement(c, metric) != c) continue;
    if (intersect(c, t.h).dim() != 0) continue;
    bool seen = false;
    for (const auto& p : oracle) seen = seen || p == c;
    if (!seen) oracle.push_back(c);
  }
  CHECK(oracle == found);
}

TEST_CASE("search edge cases and parallel agreement") {
  DiracManinTriple t = fixture_E2();
  SearchConstraints cons;
  cons.k = Subspace::zero(2);
  CHECK(search_coisotropic(t, {}, cons).empty());

  // candidates inside h with k = 0 required: dim-1 spans all meet h
  SearchConstraints cons1 = cons;
  cons1.dim = 1;
  CHECK(search_coisotropic_serial(t, {Vec{Rat(1), Rat(0)}, Vec{Rat(2), Rat(0)}}, cons1).empty());

  // serial and parallel paths agree on a larger randomized instance
  DiracManinTriple big = fixture_sl2_cartan_dirac();
  Gen gen(337);
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < big.g.dim(); ++i) candidates.push_back(big.g.basis_vector(i));
  for (int i = 0; i < 8; ++i) candidates.push_back(gen.vec(6, 2));
  SearchConstraints cons2;
  cons2.k = Subspace::zero(6);
  std::vector<Subspace> serial = search_coisotropic_serial(big, candidates, cons2);
  std::vector<Subspace> parallel = search_coisotropic_parallel(big, candidates, cons2);
  CHECK(serial == parallel);
  CHECK(!serial.empty());  // at least the diagonal g shows up
}
