#include "dirac/catalog.hpp"

namespace dirac {

DiracManinTriple build_cartan_dirac(const MetrizedLieAlgebra& h_alg, SlotConvention slot) {
  if (!check_metrized(h_alg)) throw Error("build_cartan_dirac: metric not ad-invariant");
  std::size_t n = h_alg.dim();
  LieAlgebra d = direct_sum(h_alg.algebra, h_alg.algebra);
  Mat gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram.at(i, j) = h_alg.metric.gram().at(i, j);
      gram.at(n + i, n + j) = -h_alg.metric.gram().at(i, j);
    }
  SymBivector beta(*gram.inverse());

  std::vector<Vec> diag_rows, first_rows, second_rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(2 * n, Rat(0));
    v[i] = 1;
    v[n + i] = 1;
    diag_rows.push_back(v);
    Vec f(2 * n, Rat(0));
    f[i] = 1;
    first_rows.push_back(f);
    Vec s(2 * n, Rat(0));
    s[n + i] = 1;
    second_rows.push_back(s);
  }
  DiracManinTriple t;
  t.d = d;
  t.beta = beta;
  t.g = Subspace::span(2 * n, diag_rows);
  t.h = Subspace::span(2 * n,
                       slot == SlotConvention::first ? first_rows : second_rows);
  t.samples = {Mat::identity(2 * n)};
  TripleReport rep = validate_triple(t);
  if (!rep.ok()) throw Error("build_cartan_dirac: validation failed (internal)");
  if (!rep.exact) throw Error("build_cartan_dirac: triple not exact (internal)");
  return t;
}

DiracManinTriple build_abelian_double(std::size_t n, const SymBivector& beta,
                                      const std::vector<std::size_t>& g_coords,
                                      const std::vector<std::size_t>& h_coords) {
  if (beta.dim() != n) throw Error("build_abelian_double: beta dimension mismatch");
  auto coord_span = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> rows;
    for (auto i : idx) {
      if (i >= n) throw Error("build_abelian_double: coordinate index out of range");
      Vec v(n, Rat(0));
      v[i] = 1;
      rows.push_back(v);
    }
    return Subspace::span(n, rows);
  };
  DiracManinTriple t;
  t.d = LieAlgebra::abelian(n);
  t.beta = beta;
  t.g = coord_span(g_coords);
  t.h = coord_span(h_coords);
  if (t.g.dim() + t.h.dim() != n || intersect(t.g, t.h).dim() != 0)
    throw Error("build_abelian_double: g and h do not split Q^n");
  if (!is_coisotropic(t.g, beta))
    throw Error("build_abelian_double: g fails coisotropy for this beta");
  return t;
}

DiracManinTriple build_quasi_poisson(const LieAlgebra& d, const Subspace& h, const Subspace& g,
                                     const Subspace& hprime, const SymBilinearForm& metric) {
  if (!metric.nondegenerate() || !metric_ad_invariant(d, metric))
    throw Error("build_quasi_poisson: metric must be an invariant metric");
  if (g.dim() + h.dim() + hprime.dim() != d.dim())
    throw Error("build_quasi_poisson: h + g + h' must decompose d");
  DiracManinTriple t;
  t.d = d;
  t.beta = SymBivector(*metric.gram().inverse());
  t.g = sum(g, hprime);
  t.h = h;
  TripleReport rep = validate_triple(t);
  if (!rep.ok()) throw Error("build_quasi_poisson: resulting triple fails validation");
  return t;
}

MatrixRep sl2_defining_rep() {
  return MatrixRep{LieAlgebra::sl2(), 2,
                   {Mat::from_strings({{"0", "1"}, {"0", "0"}}),
                    Mat::from_strings({{"0", "0"}, {"1", "0"}}),
                    Mat::from_strings({{"1", "0"}, {"0", "-1"}})}};
}

DiracManinTriple fixture_E1() {
  return build_abelian_double(2, SymBivector(Mat::from_strings({{"0", "1"}, {"1", "0"}})), {0},
                              {1});
}

DiracManinTriple fixture_E2() {
  LieAlgebra line = LieAlgebra::abelian(1);
  MetrizedLieAlgebra m{line, SymBilinearForm(Mat::identity(1))};
  return build_cartan_dirac(m, SlotConvention::first);
}

DiracManinTriple fixture_E4() {
  DiracManinTriple t;
  t.d = LieAlgebra::abelian(2);
  t.beta = SymBivector(Mat::identity(2));
  t.g = Subspace::span(2, {Vec{Rat(1), Rat(0)}});
  t.h = Subspace::span(2, {Vec{Rat(0), Rat(1)}});
  return t;
}

DiracManinTriple fixture_E3_nonexact() {
  Mat b(3, 3);
  b.at(0, 1) = b.at(1, 0) = 1;  // kernel along the third dual coordinate
  DiracManinTriple t;
  t.d = LieAlgebra::abelian(3);
  t.beta = SymBivector(b);
  t.g = Subspace::span(3, {Vec{Rat(1), Rat(0), Rat(0)}});
  t.h = Subspace::span(3, {Vec{Rat(0), Rat(1), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1)}});
  return t;
}

DiracManinTriple fixture_sl2_cartan_dirac() {
  MetrizedLieAlgebra m{LieAlgebra::sl2(), trace_form(sl2_defining_rep())};
  return build_cartan_dirac(m, SlotConvention::first);
}

DiracManinTriple fixture_sl2_quasi_poisson() {
  LieAlgebra sl2 = LieAlgebra::sl2();  // basis (e, f, H)
  SymBilinearForm metric = trace_form(sl2_defining_rep());
  Subspace h = Subspace::span(3, {Vec{Rat(1), Rat(0), Rat(0)}});       // span e
  Subspace g = Subspace::span(3, {Vec{Rat(0), Rat(0), Rat(1)}});       // span H
  Subspace hp = Subspace::span(3, {Vec{Rat(0), Rat(1), Rat(0)}});      // span f
  return build_quasi_poisson(sl2, h, g, hp, metric);
}

MatrixRep doubled_rep(const MatrixRep& rep) {
  std::size_t n = rep.algebra.dim(), m = rep.rep_dim;
  MatrixRep out;
  out.algebra = direct_sum(rep.algebra, rep.algebra);
  out.rep_dim = 2 * m;
  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < n; ++i) {
      Mat img(2 * m, 2 * m);
      std::size_t off = pass == 0 ? 0 : m;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) img.at(off + a, off + b) = rep.images[i].at(a, b);
      out.images.push_back(img);
    }
  return out;
}

}  // namespace dirac
