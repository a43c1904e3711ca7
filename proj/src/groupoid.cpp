#include "dirac/groupoid.hpp"

namespace dirac {

namespace {

// core coordinates of each row of `rows`, as columns
Mat core_coords(const QuotientSpace& core, const Mat& rows) {
  Mat out(core.dim(), rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    Vec c = core.projection * rows.row(i);
    for (std::size_t k = 0; k < core.dim(); ++k) out.at(k, i) = c[k];
  }
  return out;
}

// the unique covector in span(rows of N) agreeing with the argument on
// span(rows of K), as the matrix mu -> N^T (K N^T)^{-1} K mu
Mat restriction_transport(const Mat& n, const Mat& k) {
  auto inv = (k * n.transpose()).inverse();
  if (!inv) throw Error("dualize: degenerate restriction pairing (internal)");
  return n.transpose() * *inv * k;
}

}  // namespace

LinearGroupoid make_groupoid(std::size_t dim, const Subspace& units, const Mat& s, const Mat& t) {
  if (units.ambient_dim() != dim || s.rows() != dim || s.cols() != dim || t.rows() != dim ||
      t.cols() != dim)
    throw Error("make_groupoid: dimension mismatch");
  if (s * s != s || t * t != t) throw Error("make_groupoid: s and t must be idempotent");
  if (image(s, Subspace::full(dim)) != units || image(t, Subspace::full(dim)) != units)
    throw Error("make_groupoid: source/target must map onto the units");

  LinearGroupoid g;
  g.dim = dim;
  g.units = units;
  g.s = s;
  g.t = t;
  g.ker_s = Subspace(dim, s.nullspace());
  g.ker_t = Subspace(dim, t.nullspace());
  g.core = quotient(dim, units);
  g.core_from_ker_s = core_coords(g.core, g.ker_s.basis());
  g.core_from_ker_t = core_coords(g.core, g.ker_t.basis());
  if (g.core_from_ker_s.rank() != g.core.dim() || g.core_from_ker_t.rank() != g.core.dim())
    throw Error("make_groupoid: kernels do not model the core (internal)");
  return g;
}

Vec compose(const LinearGroupoid& g, const Vec& x, const Vec& y) {
  if (!g.composable(x, y)) throw Error("compose: s(x) != t(y)");
  return x + y - g.s * x;
}

Vec invert(const LinearGroupoid& g, const Vec& x) { return g.s * x + g.t * x - x; }

Mat composable_pairs(const LinearGroupoid& g) { return g.s.hstack(-g.t).nullspace(); }

Mat module_composable_pairs(const LinearModule& m) {
  return m.over.s.hstack(-m.u).nullspace();
}

namespace {

void verify_groupoid_pairing(const LinearGroupoid& g, const LinearGroupoid& dual) {
  Mat primal = composable_pairs(g);
  Mat co = composable_pairs(dual);
  std::size_t n = g.dim;
  for (std::size_t a = 0; a < co.rows(); ++a) {
    Vec mu = slice(co.row(a), 0, n);
    Vec nu = slice(co.row(a), n, 2 * n);
    Vec prod_mu = compose(dual, mu, nu);
    for (std::size_t b = 0; b < primal.rows(); ++b) {
      Vec v = slice(primal.row(b), 0, n);
      Vec w = slice(primal.row(b), n, 2 * n);
      if (dot(prod_mu, compose(g, v, w)) != dot(mu, v) + dot(nu, w))
        throw Error("dualize: pairing law fails (internal bug)");
    }
  }
}

}  // namespace

LinearGroupoid dualize(const LinearGroupoid& g) {
  std::size_t n = g.dim;
  Subspace dual_units = annihilator(g.units);
  Mat shat, that;
  if (dual_units.dim() == 0) {
    shat = Mat(n, n);
    that = Mat(n, n);
  } else {
    shat = restriction_transport(dual_units.basis(), g.ker_t.basis());
    that = restriction_transport(dual_units.basis(), g.ker_s.basis());
  }
  LinearGroupoid dual = make_groupoid(n, dual_units, shat, that);
  verify_groupoid_pairing(g, dual);
  return dual;
}

LinearModule make_module(const LinearGroupoid& g, std::size_t p_dim, const Mat& u,
                         const Mat& core_act) {
  if (u.rows() != g.dim || u.cols() != p_dim || core_act.rows() != p_dim ||
      core_act.cols() != g.dim)
    throw Error("make_module: dimension mismatch");
  if (p_dim > 0 && !g.units.contains(image(u, Subspace::full(p_dim))))
    throw Error("make_module: moment image must lie in the units");
  for (std::size_t i = 0; i < g.ker_s.dim(); ++i) {
    Vec w = g.ker_s.basis_vector(i);
    if (u * (core_act * w) != g.t * w)
      throw Error("make_module: u(A(w)) != t(w) on ker(s)");
  }
  return {g, p_dim, u, core_act};
}

Vec act(const LinearModule& m, const Vec& x, const Vec& y) {
  if (!m.composable(x, y)) throw Error("act: s(x) != u(y)");
  return y + m.core_act * (x - m.over.s * x);
}

LinearModule units_module(const LinearGroupoid& g) {
  std::size_t k = g.units.dim();
  Mat u = g.units.basis().transpose();  // embed unit coords into V
  // A(w) = unit coordinates of t(w); exact since t(w) lies in the units
  Mat coord = k ? *(g.units.basis() * g.units.basis().transpose()).inverse() * g.units.basis()
                : Mat(0, g.dim);
  return make_module(g, k, u, coord * g.t);
}

LinearModule left_translation_module(const LinearGroupoid& g) {
  return make_module(g, g.dim, g.t, Mat::identity(g.dim));
}

LinearModule dual_module(const LinearGroupoid& g, const LinearModule& m) {
  LinearGroupoid dual = dualize(g);
  std::size_t n = g.dim;
  Mat u_dual;
  if (dual.units.dim() == 0) {
    u_dual = Mat(n, m.p_dim);
  } else {
    u_dual = restriction_transport(dual.units.basis(), g.ker_s.basis()) * m.core_act.transpose();
  }
  LinearModule md = make_module(dual, m.p_dim, u_dual, m.u.transpose());

  // pairing law <mu o rho, v o w> = <mu,v> + <rho,w> on exhaustive bases
  Mat primal = module_composable_pairs(m);
  Mat co = module_composable_pairs(md);
  for (std::size_t a = 0; a < co.rows(); ++a) {
    Vec mu = slice(co.row(a), 0, n);
    Vec rho = slice(co.row(a), n, n + m.p_dim);
    Vec prod = act(md, mu, rho);
    for (std::size_t b = 0; b < primal.rows(); ++b) {
      Vec v = slice(primal.row(b), 0, n);
      Vec w = slice(primal.row(b), n, n + m.p_dim);
      if (dot(prod, act(m, v, w)) != dot(mu, v) + dot(rho, w))
        throw Error("dual_module: pairing law fails (internal bug)");
    }
  }
  return md;
}

namespace {

// projection onto `onto` along `along`, given onto + along = V directly
Mat projection_along(const Subspace& onto, const Subspace& along) {
  std::size_t n = onto.ambient_dim(), k = onto.dim();
  Mat tmat = onto.basis().vstack(along.basis());
  auto inv = tmat.inverse();
  if (!inv) throw Error("projection_along: not a splitting");
  Mat coords = inv->transpose().submatrix(0, 0, k, n);
  return onto.basis().transpose() * coords;
}

}  // namespace

MetrizedLinearGroupoid from_manin_pair(const ManinPair& pair, const Subspace& r) {
  std::size_t n = pair.q.dim();
  const Subspace& g = pair.g;
  if (r.ambient_dim() != n) throw Error("from_manin_pair: dimension mismatch");
  if (orth_complement(g, pair.q.metric) != g)
    throw Error("from_manin_pair: g is not Lagrangian");
  if (intersect(r, g).dim() != 0 || r.dim() + g.dim() != n)
    throw Error("from_manin_pair: r is not a complement of g");
  Subspace rperp = orth_complement(r, pair.q.metric);
  if (intersect(rperp, g).dim() != 0 || rperp.dim() + g.dim() != n)
    throw Error("from_manin_pair: r^perp is not a complement of g");

  Mat s = Mat::identity(n) - projection_along(rperp, g);
  Mat t = Mat::identity(n) - projection_along(r, g);
  MetrizedLinearGroupoid mg{make_groupoid(n, g, s, t), pair.q.metric, g, r};

  // quadratic multiplicativity identity, polarized over the composable
  // subspace
  Mat pairs = composable_pairs(mg.gpd);
  auto half = [&](const Vec& p, bool first) {
    return first ? Vec(p.begin(), p.begin() + n) : Vec(p.begin() + n, p.end());
  };
  for (std::size_t a = 0; a < pairs.rows(); ++a)
    for (std::size_t b = a; b < pairs.rows(); ++b) {
      Vec xa = half(pairs.row(a), true), ya = half(pairs.row(a), false);
      Vec xb = half(pairs.row(b), true), yb = half(pairs.row(b), false);
      Vec ma = compose(mg.gpd, xa, ya), mb = compose(mg.gpd, xb, yb);
      Rat lhs = mg.metric.eval(ma, mb);
      Rat rhs = mg.metric.eval(xa, xb) + mg.metric.eval(ya, yb);
      if (lhs != rhs) throw Error("from_manin_pair: metric multiplicativity fails for this r");
    }
  return mg;
}

MetrizedLinearGroupoid groupoid_of_qpair(const QPair& qp) {
  if (!qp.r) throw Error("groupoid_of_qpair: triple carried no h, canonical r unavailable");
  return from_manin_pair(qp.pair(), *qp.r);
}

SymBivector gamma_g(const MetrizedLinearGroupoid& mg) {
  SymBivector gamma_q(*mg.metric.gram().inverse());
  SymBivector via_t = pushforward(mg.gpd.t, gamma_q);
  SymBivector via_s = pushforward(mg.gpd.s, gamma_q);
  if (via_t.gram() != -via_s.gram())
    throw Error("gamma_g: t(gamma_q) != -s(gamma_q) (invalid metrized groupoid)");
  // extract the g-coordinate gram: t(gamma_q) = R^T Gamma R for the RREF
  // basis rows R of g
  const Mat& rbas = mg.g.basis();
  std::size_t k = mg.g.dim();
  if (k == 0) return SymBivector(Mat(0, 0));
  Mat gram_inv = *(rbas * rbas.transpose()).inverse();
  Mat gamma = gram_inv * rbas * via_t.gram() * rbas.transpose() * gram_inv;
  if (rbas.transpose() * gamma * rbas != via_t.gram())
    throw Error("gamma_g: pushforward not supported on g (invalid metrized groupoid)");
  return SymBivector(gamma);
}

LinearModule moment_to_action(const MetrizedLinearGroupoid& mg, std::size_t p_dim,
                              const SymBilinearForm& metric_p, const Mat& u_map) {
  std::size_t n = mg.gpd.dim;
  if (metric_p.dim() != p_dim || u_map.rows() != n || u_map.cols() != p_dim)
    throw Error("moment_to_action: dimension mismatch");
  auto inv_p = metric_p.gram().inverse();
  if (!inv_p) throw Error("moment_to_action: metric_p is degenerate");
  if (p_dim > 0 && !mg.g.contains(image(u_map, Subspace::full(p_dim))))
    throw Error("moment_to_action: moment image must lie in g");

  Mat f_p = *inv_p * u_map.transpose() * mg.metric.gram();
  if (u_map * f_p != mg.gpd.t - mg.gpd.s)
    throw Error("moment_to_action: u F_p != t - s (inadmissible u_map)");

  LinearModule m = make_module(mg.gpd, p_dim, u_map, f_p);

  // metric preservation, polarized over the composable subspace of V + P
  Mat pairs = module_composable_pairs(m);
  for (std::size_t a = 0; a < pairs.rows(); ++a)
    for (std::size_t b = a; b < pairs.rows(); ++b) {
      Vec la = slice(pairs.row(a), 0, n);
      Vec za = slice(pairs.row(a), n, n + p_dim);
      Vec lb = slice(pairs.row(b), 0, n);
      Vec zb = slice(pairs.row(b), n, n + p_dim);
      Rat lhs = metric_p.eval(act(m, la, za), act(m, lb, zb));
      Rat rhs = mg.metric.eval(la, lb) + metric_p.eval(za, zb);
      if (lhs != rhs) throw Error("moment_to_action: metric not preserved (inadmissible u_map)");
    }

  // u_p(gamma_p) = gamma_g
  SymBivector gamma_p(*inv_p);
  SymBivector pushed = pushforward(u_map, gamma_p);
  const Mat& rbas = mg.g.basis();
  SymBivector gg = gamma_g(mg);
  if (rbas.transpose() * gg.gram() * rbas != pushed.gram())
    throw Error("moment_to_action: u_p(gamma_p) != gamma_g (inadmissible u_map)");
  return m;
}

}  // namespace dirac
