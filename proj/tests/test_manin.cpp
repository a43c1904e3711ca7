#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac/catalog.hpp"
#include "dirac/manin.hpp"
#include "test_support.hpp"

using namespace dirac;
using dirac::testing::Gen;

TEST_CASE("ad-invariant bivectors") {
  CHECK(check_ad_invariant_bivector(LieAlgebra::sl2(), SymBivector::zero(3)));
  Gen gen(41);
  CHECK(check_ad_invariant_bivector(LieAlgebra::abelian(3), SymBivector(gen.symmetric(3))));
  // invariance of the trace form transfers to its inverse
  SymBilinearForm b = trace_form(sl2_defining_rep());
  CHECK(check_ad_invariant_bivector(LieAlgebra::sl2(), SymBivector(*b.gram().inverse())));
  // a generic bivector on sl2 is not invariant
  CHECK(!check_ad_invariant_bivector(LieAlgebra::sl2(), SymBivector(Mat::identity(3))));
}

TEST_CASE("validate_triple on the fixtures") {
  TripleReport e1 = validate_triple(fixture_E1());
  CHECK(e1.ok());
  CHECK(e1.exact);

  TripleReport e2 = validate_triple(fixture_E2());
  CHECK(e2.ok());
  CHECK(e2.exact);

  TripleReport e4 = validate_triple(fixture_E4());
  CHECK(!e4.ok());
  bool coiso_failed = false;
  for (const auto& c : e4.checks.items)
    if (c.name == "g beta-coisotropic") {
      coiso_failed = !c.pass;
      CHECK(c.witness != "");
    }
  CHECK(coiso_failed);

  CHECK(validate_triple(fixture_sl2_cartan_dirac()).ok());
  CHECK(validate_triple(fixture_sl2_cartan_dirac()).exact);
  TripleReport qp = validate_triple(fixture_sl2_quasi_poisson());
  CHECK(qp.ok());
  CHECK(!qp.exact);  // the middle term is not Lagrangian
  TripleReport e3 = validate_triple(fixture_E3_nonexact());
  CHECK(e3.ok());
  CHECK(!e3.exact);  // beta has a kernel
}

TEST_CASE("equivariance samples") {
  DiracManinTriple t = fixture_E2();
  CHECK(check_equivariance(t).ok());  // identity sample

  // a swap of e1, e2 moves h = span(1,0)
  DiracManinTriple bad = t;
  Mat swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  bad.samples = {swap};
  Checklist cl = check_equivariance(bad);
  CHECK(!cl.ok());
  for (const auto& c : cl.items)
    if (c.name == "sample 0 preserves h") CHECK(!c.pass);
}

TEST_CASE("build_double: smallest case") {
  Double dbl = build_double(LieAlgebra::abelian(1), SymBivector::zero(1));
  CHECK(dbl.dtilde.dim() == 2);
  CHECK(dbl.dtilde.algebra == LieAlgebra::abelian(2));
  CHECK(dbl.dtilde.metric.gram() == Mat::from_strings({{"0", "1"}, {"1", "0"}}));
}

TEST_CASE("build_double: E1 block formulas") {
  DiracManinTriple t = fixture_E1();
  Double dbl = build_double(t.d, t.beta);
  CHECK(dbl.dtilde.dim() == 4);
  const Mat& b = t.beta.gram();
  // beta_tilde = [[-B, I], [I, 0]], the inverse of [[0, I], [I, B]]
  Mat expect(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    expect.at(i, 2 + i) = 1;
    expect.at(2 + i, i) = 1;
    for (std::size_t j = 0; j < 2; ++j) expect.at(i, j) = -b.at(i, j);
  }
  CHECK(dbl.beta_tilde.gram() == expect);
  CHECK(pushforward(dbl.s_map, dbl.beta_tilde).gram() == -t.beta.gram());
  CHECK(pushforward(dbl.t_map, dbl.beta_tilde).gram() == t.beta.gram());
}

TEST_CASE("build_double: source/target identities on all fixtures") {
  for (const auto& t : {fixture_E1(), fixture_E2(), fixture_sl2_cartan_dirac(),
                        fixture_sl2_quasi_poisson(), fixture_E3_nonexact()}) {
    Double dbl = build_double(t.d, t.beta);
    CHECK(check_jacobi(dbl.dtilde.algebra).ok);
    CHECK(check_metrized(dbl.dtilde));
    CHECK(pushforward(dbl.s_map, dbl.beta_tilde) == SymBivector(-t.beta.gram()));
    CHECK(pushforward(dbl.t_map, dbl.beta_tilde) == t.beta);
    // s and t are morphisms onto d
    CHECK(check_morphism(dbl.dtilde.algebra, t.d, dbl.s_map));
    CHECK(check_morphism(dbl.dtilde.algebra, t.d, dbl.t_map));
  }
}

TEST_CASE("build_double rejects a non-invariant bivector") {
  CHECK_THROWS_AS(build_double(LieAlgebra::sl2(), SymBivector(Mat::identity(3))), Error);
}

TEST_CASE("reduce_coisotropic: identity and zero cases") {
  MetrizedLieAlgebra m{LieAlgebra::sl2(), trace_form(sl2_defining_rep())};
  Reduced r = reduce_coisotropic(m, Subspace::full(3));
  CHECK(r.algebra().algebra == m.algebra);
  CHECK(r.algebra().metric == m.metric);

  // c = c^perp collapses to the zero algebra
  MetrizedLieAlgebra hyp{LieAlgebra::abelian(2),
                         SymBilinearForm(Mat::from_strings({{"0", "1"}, {"1", "0"}}))};
  Reduced z = reduce_coisotropic(hyp, Subspace::span(2, {Vec{Rat(1), Rat(0)}}));
  CHECK(z.dim() == 0);
}

TEST_CASE("reduce_coisotropic: E1 double by g + d*") {
  DiracManinTriple t = fixture_E1();
  Double dbl = build_double(t.d, t.beta);
  Subspace c = preimage(dbl.s_map, t.g);
  CHECK(c.dim() == 3);
  Reduced r = reduce_coisotropic(dbl.dtilde, c);
  CHECK(r.perp().dim() == 1);
  CHECK(c.contains(r.perp()));
  CHECK(r.dim() == 2);
}

TEST_CASE("reduce_coisotropic error paths") {
  // c not a subalgebra: span{e, f} in sl2
  MetrizedLieAlgebra m{LieAlgebra::sl2(), trace_form(sl2_defining_rep())};
  Subspace ef = Subspace::span(3, {Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(1), Rat(0)}});
  CHECK_THROWS_WITH_AS(reduce_coisotropic(m, ef), "reduce_coisotropic: c is not a subalgebra",
                       Error);

  // c^perp not contained in c
  MetrizedLieAlgebra ab{LieAlgebra::abelian(2), SymBilinearForm(Mat::identity(2))};
  CHECK_THROWS_WITH_AS(reduce_coisotropic(ab, Subspace::span(2, {Vec{Rat(1), Rat(0)}})),
                       "reduce_coisotropic: c^perp not contained in c", Error);

  // c^perp not an ideal in c: basis (a, b, u, v), [a,u] = v,
  // metric pairs (a,a), (u,b), (v,v); then c = span{a,u,v} has c^perp =
  // span{u} and [a,u] = v escapes
  LieAlgebra l(4, {{0, 2, Vec{Rat(0), Rat(0), Rat(0), Rat(1)}}});
  Mat g(4, 4);
  g.at(0, 0) = 1;
  g.at(1, 2) = g.at(2, 1) = 1;
  g.at(3, 3) = 1;
  MetrizedLieAlgebra m4{l, SymBilinearForm(g)};
  Subspace c = Subspace::span(4, {Vec{Rat(1), Rat(0), Rat(0), Rat(0)},
                                  Vec{Rat(0), Rat(0), Rat(1), Rat(0)},
                                  Vec{Rat(0), Rat(0), Rat(0), Rat(1)}});
  CHECK_THROWS_WITH_AS(reduce_coisotropic(m4, c), "reduce_coisotropic: c^perp is not an ideal in c",
                       Error);
}

TEST_CASE("build_q_pair: E1 gives an isomorphism onto d") {
  QPair qp = build_q_pair(fixture_E1());
  CHECK(qp.q.dim() == 2);
  CHECK(qp.fq.rank() == 2);  // exactness forces bijectivity
  CHECK(qp.g_image.dim() == 1);
  CHECK(qp.r.has_value());
  CHECK(intersect(*qp.r, qp.g_image).dim() == 0);
}

TEST_CASE("build_q_pair: zero g") {
  DiracManinTriple t;
  t.d = LieAlgebra::abelian(2);
  t.beta = SymBivector::zero(2);
  t.g = Subspace::zero(2);
  t.h = Subspace::full(2);
  QPair qp = build_q_pair(t);
  CHECK(qp.q.dim() == 0);
}

TEST_CASE("build_q_pair: E2 hand values") {
  QPair qp = build_q_pair(fixture_E2());
  CHECK(qp.q.dim() == 2);
  CHECK(qp.q.metric.gram() == Mat::from_strings({{"1", "0"}, {"0", "-1"}}));
  CHECK(qp.gamma_q.gram().determinant() < 0);  // split signature
  CHECK(qp.fq == Mat::from_strings({{"1", "0"}, {"0", "-1"}}));
  CHECK(qp.g_image == Subspace::span(2, {Vec{Rat(1), Rat(-1)}}));
  CHECK(pushforward(qp.fq, qp.gamma_q) == fixture_E2().beta);
  CHECK(*qp.t_q == Mat::from_strings({{"0", "-1"}, {"0", "1"}}));
  CHECK(*qp.r == Subspace::span(2, {Vec{Rat(1), Rat(0)}}));
}

TEST_CASE("build_q_pair invariants on all valid fixtures") {
  for (const auto& t : {fixture_E1(), fixture_E2(), fixture_sl2_cartan_dirac(),
                        fixture_sl2_quasi_poisson(), fixture_E3_nonexact()}) {
    QPair qp = build_q_pair(t);
    CHECK(qp.q.dim() == 2 * t.g.dim());
    CHECK(check_metrized(qp.q));
    CHECK(orth_complement(qp.g_image, qp.q.metric) == qp.g_image);  // Lagrangian
    CHECK(check_morphism(qp.q.algebra, t.d, qp.fq));
    CHECK(qp.fq * qp.g_embed == t.g.basis().transpose());
    CHECK(pushforward(qp.fq, qp.gamma_q) == t.beta);
    // r is a subalgebra complementary to g
    REQUIRE(qp.r.has_value());
    CHECK(is_subalgebra(qp.q.algebra, *qp.r));
    CHECK(intersect(*qp.r, qp.g_image).dim() == 0);
    CHECK(sum(*qp.r, qp.g_image).dim() == qp.q.dim());
  }
}

TEST_CASE("exactness of f_q") {
  // exact fixtures: f_q bijective
  CHECK(build_q_pair(fixture_E1()).fq.inverse().has_value());
  CHECK(build_q_pair(fixture_E2()).fq.inverse().has_value());
  // beta with a 1-dim kernel: q has dim 2 but d has dim 3
  QPair qp = build_q_pair(fixture_E3_nonexact());
  CHECK(qp.q.dim() == 2);
  CHECK(qp.fq.rank() < fixture_E3_nonexact().dim());
}

TEST_CASE("build_beta / extract_gamma_phi dictionary") {
  // gamma = 0, phi = 0 gives beta = 0
  DiracManinTriple e1 = fixture_E1();
  SymBivector zero_beta =
      build_beta(SymBivector::zero(1), Mat(1, 1), e1.d, e1.g, e1.h);
  CHECK(zero_beta == SymBivector::zero(2));

  // E1: gamma_g = [0], phi = identity
  GammaPhi gp = extract_gamma_phi(e1);
  CHECK(gp.gamma_g.gram() == Mat(1, 1));
  CHECK(gp.phi == Mat::identity(1));
  CHECK(build_beta(gp.gamma_g, gp.phi, e1.d, e1.g, e1.h) == e1.beta);

  // E2 round-trip; pr_g(beta) computed by the independent pushforward oracle
  DiracManinTriple e2 = fixture_E2();
  GammaPhi gp2 = extract_gamma_phi(e2);
  CHECK(gp2.gamma_g == pushforward(g_coordinate_projection(e2), e2.beta));
  CHECK(build_beta(gp2.gamma_g, gp2.phi, e2.d, e2.g, e2.h) == e2.beta);
}

TEST_CASE("round-trip on all validated fixtures") {
  for (const auto& t : {fixture_E1(), fixture_E2(), fixture_sl2_cartan_dirac(),
                        fixture_sl2_quasi_poisson(), fixture_E3_nonexact()}) {
    GammaPhi gp = extract_gamma_phi(t);
    CHECK(build_beta(gp.gamma_g, gp.phi, t.d, t.g, t.h) == t.beta);
    // pushforward(pr_g, built beta) = gamma_g
    SymBivector rebuilt = build_beta(gp.gamma_g, gp.phi, t.d, t.g, t.h);
    CHECK(pushforward(g_coordinate_projection(t), rebuilt) == gp.gamma_g);
    CHECK(is_coisotropic(t.g, rebuilt));
  }
}

TEST_CASE("nondegenerate gamma_g with bijective phi gives nondegenerate beta") {
  Gen gen(53);
  // random 2+2 split of an abelian Q^4
  LieAlgebra d = LieAlgebra::abelian(4);
  Subspace g = Subspace::span(4, {Vec{Rat(1), Rat(0), Rat(0), Rat(0)},
                                  Vec{Rat(0), Rat(1), Rat(0), Rat(0)}});
  Subspace h = Subspace::span(4, {Vec{Rat(0), Rat(0), Rat(1), Rat(0)},
                                  Vec{Rat(0), Rat(0), Rat(0), Rat(1)}});
  for (int trial = 0; trial < 10; ++trial) {
    Mat gamma = gen.symmetric(2);
    if (gamma.rank() < 2) continue;
    Mat phi = gen.invertible(2);
    SymBivector beta = build_beta(SymBivector(gamma), phi, d, g, h);
    CHECK(beta.nondegenerate());
  }
}
