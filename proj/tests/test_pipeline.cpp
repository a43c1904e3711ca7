#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac/catalog.hpp"
#include "dirac/homogeneous.hpp"
#include "test_support.hpp"

using namespace dirac;
using dirac::testing::Gen;

namespace {

// full invariant sweep for one validated triple
void sweep(const DiracManinTriple& t) {
  TripleReport rep = validate_triple(t);
  REQUIRE(rep.ok());

  Double dbl = build_double(t.d, t.beta);
  CHECK(check_jacobi(dbl.dtilde.algebra).ok);
  CHECK(check_metrized(dbl.dtilde));
  CHECK(pushforward(dbl.s_map, dbl.beta_tilde) == SymBivector(-t.beta.gram()));
  CHECK(pushforward(dbl.t_map, dbl.beta_tilde) == t.beta);

  QPair qp = build_q_pair(t);
  CHECK(qp.q.dim() == 2 * t.g.dim());
  CHECK(pushforward(qp.fq, qp.gamma_q) == t.beta);
  CHECK(is_subalgebra(qp.q.algebra, *qp.r));

  MetrizedLinearGroupoid mg = groupoid_of_qpair(qp);
  SymBivector gg = gamma_g(mg);
  CHECK(mg.g.basis().transpose() * gg.gram() * mg.g.basis() ==
        qp.g_embed * pushforward(g_coordinate_projection(t), t.beta).gram() *
            qp.g_embed.transpose());

  // the dictionary beta <-> (gamma_g, phi) round-trips
  GammaPhi gp = extract_gamma_phi(t);
  CHECK(build_beta(gp.gamma_g, gp.phi, t.d, t.g, t.h) == t.beta);

  // Robinson datum c = g reconstructs classification data
  ClassificationData data = robinson_build({t.g, intersect(t.g, t.h), {}}, t);
  CHECK(validate_classification(data, t).ok());
  CHECK(check_transitive(data, t));
  CHECK(verify_robinson_iso(data, t).ok());
  if (rep.exact) {
    ExactCaseResult ex = check_exact_case(data, t);
    CHECK(ex.ok);
    CHECK(ex.c == t.g);
  }
}

}  // namespace

TEST_CASE("pipeline sweep over random Cartan-Dirac triples") {
  Gen gen(1009);
  int done = 0;
  while (done < 8) {
    std::size_t n = gen.index(3) + 1;
    Mat gram = gen.symmetric(n, 3);
    if (gram.rank() < n) continue;
    MetrizedLieAlgebra h_alg{LieAlgebra::abelian(n), SymBilinearForm(gram)};
    sweep(build_cartan_dirac(h_alg, done % 2 ? SlotConvention::second : SlotConvention::first));
    ++done;
  }
}

TEST_CASE("pipeline sweep over random abelian doubles") {
  Gen gen(1013);
  int done = 0;
  while (done < 12) {
    std::size_t n = gen.index(4) + 2;
    SymBivector beta(gen.symmetric(n, 2));  // degenerate grams welcome
    // random coordinate split
    std::vector<std::size_t> g_idx, h_idx;
    for (std::size_t i = 0; i < n; ++i) (gen.index(2) ? g_idx : h_idx).push_back(i);
    DiracManinTriple t;
    try {
      t = build_abelian_double(n, beta, g_idx, h_idx);
    } catch (const Error&) {
      continue;  // coisotropy failed for this draw
    }
    sweep(t);
    ++done;
  }
}

TEST_CASE("pipeline sweep over the nonabelian fixtures") {
  sweep(fixture_sl2_cartan_dirac());
  sweep(fixture_sl2_quasi_poisson());
}
