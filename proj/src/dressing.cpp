#include "dirac/dressing.hpp"

namespace dirac {

namespace {

// coordinate matrix of the rep: columns are the flattened images
Mat rep_coordinate_matrix(const MatrixRep& rep) {
  std::size_t r = rep.rep_dim, n = rep.algebra.dim();
  Mat coord(r * r, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) coord.at(a * r + b, j) = rep.images[j].at(a, b);
  return coord;
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

Vec adjoint_of(const MatrixRep& rep, const Mat& h, const Vec& lambda) {
  auto hinv = h.inverse();
  if (!hinv) throw Error("adjoint_of: group element not invertible");
  Mat conj = h * rep.rho(lambda) * *hinv;
  auto sol = rep_coordinate_matrix(rep).solve(flatten(conj));
  if (!sol) throw Error("adjoint_of: element does not normalize the rep image of d");
  return *sol;
}

Mat adjoint_matrix(const MatrixRep& rep, const Mat& h) {
  std::size_t n = rep.algebra.dim();
  auto hinv = h.inverse();
  if (!hinv) throw Error("adjoint_matrix: group element not invertible");
  Mat coord = rep_coordinate_matrix(rep);
  Mat ad(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, Rat(0));
    e[j] = 1;
    Mat conj = h * rep.rho(e) * *hinv;
    auto sol = coord.solve(flatten(conj));
    if (!sol) throw Error("adjoint_matrix: element does not normalize the rep image of d");
    for (std::size_t i = 0; i < n; ++i) ad.at(i, j) = (*sol)[i];
  }
  return ad;
}

GroupElement make_group_element(const DiracManinTriple& t, const MatrixRep& rep, const Mat& h) {
  if (rep.algebra.dim() != t.dim()) throw Error("make_group_element: rep dimension mismatch");
  auto hinv = h.inverse();
  if (!hinv) throw Error("make_group_element: matrix not invertible");
  GroupElement e;
  e.matrix = h;
  e.matrix_inv = *hinv;
  e.ad = adjoint_matrix(rep, h);
  e.ad_inv = adjoint_matrix(rep, *hinv);
  if (e.ad * e.ad_inv != Mat::identity(t.dim()))
    throw Error("make_group_element: Ad_h Ad_{h^-1} != id (internal)");
  if (!check_morphism(t.d, t.d, e.ad))
    throw Error("make_group_element: Ad_h is not a Lie algebra automorphism");
  if (pushforward(e.ad, t.beta) != t.beta)
    throw Error("make_group_element: Ad_h does not preserve beta");
  if (image(e.ad, t.h) != t.h)
    throw Error("make_group_element: Ad_h does not preserve the h-subalgebra");
  return e;
}

GroupElement group_inverse(const GroupElement& e) {
  return {e.matrix_inv, e.matrix, e.ad_inv, e.ad};
}

GroupElement group_product(const DiracManinTriple& t, const MatrixRep& rep,
                           const GroupElement& a, const GroupElement& b) {
  return make_group_element(t, rep, a.matrix * b.matrix);
}

Vec dressing_field(const DiracManinTriple& t, const GroupElement& h, const Vec& lambda) {
  return h.ad_inv * (pr_h(t) * (h.ad * lambda));
}

Vec bullet_on_g(const DiracManinTriple& t, const GroupElement& h, const Vec& xi) {
  if (!t.g.contains(xi)) throw Error("bullet_on_g: argument must lie in g");
  return pr_g(t) * (h.ad * xi);
}

Vec ehat_moment(const DiracManinTriple& t, const GroupElement& h, const Vec& lambda) {
  return pr_g(t) * (h.ad * lambda);
}

StabilizerReport stabilizer_kernel(const DiracManinTriple& t, const GroupElement& h) {
  StabilizerReport r;
  r.kernel = Subspace(t.dim(), (pr_h(t) * h.ad).nullspace());
  r.equals_ad_inv_g = r.kernel == image(h.ad_inv, t.g);
  r.equals_ad_g = r.kernel == image(h.ad, t.g);
  r.coisotropic = is_coisotropic(r.kernel, t.beta);
  return r;
}

Vec exact_splitting(const DiracManinTriple& t, const GroupElement& h, const Vec& nu) {
  TripleReport rep = validate_triple(t);
  if (!rep.exact) throw Error("exact_splitting: triple is not exact");
  if (!t.h.contains(nu)) throw Error("exact_splitting: nu must lie in the h-subalgebra");
  SymBilinearForm metric(*t.beta.gram().inverse());
  Subspace hperp = orth_complement(t.h, metric);
  if (intersect(t.g, hperp).dim() != 0 || t.g.dim() + hperp.dim() != t.dim())
    throw Error("exact_splitting: g + h^perp does not split d");
  // projection onto g along h^perp
  Mat tmat = t.g.basis().vstack(hperp.basis());
  Mat coords = tmat.inverse()->transpose().submatrix(0, 0, t.g.dim(), t.dim());
  Mat proj_g = t.g.basis().transpose() * coords;
  return nu - Rat(1, 2) * (h.ad_inv * (proj_g * (h.ad * nu)));
}

Vec th_g_lift(const DiracManinTriple& t, const GroupElement& h, const Vec& tau, const Vec& xi) {
  if (!t.h.contains(tau)) throw Error("th_g_lift: tau must lie in the h-subalgebra");
  if (!t.g.contains(xi)) throw Error("th_g_lift: xi must lie in g");
  return tau + h.ad_inv * xi;
}

std::pair<Vec, Vec> th_g_lift_inverse(const DiracManinTriple& t, const GroupElement& h,
                                      const Vec& lambda) {
  return {dressing_field(t, h, lambda), ehat_moment(t, h, lambda)};
}

SemidirectContext make_semidirect_context(const DiracManinTriple& t, const MatrixRep& rep) {
  QPair qp = build_q_pair(t);
  MetrizedLinearGroupoid mg = groupoid_of_qpair(qp);
  return {t, rep, std::move(qp), std::move(mg)};
}

Mat bullet_on_q_matrix(const SemidirectContext& ctx, const GroupElement& h) {
  const QPair& qp = ctx.qp;
  std::size_t qd = qp.q.dim(), kg = ctx.triple.g.dim();
  const Mat& e = qp.g_embed;      // g coords -> q
  const Mat& gq = qp.q.metric.gram();

  // bullet on g in g-basis coordinates
  Mat pg = g_coordinate_projection(ctx.triple);
  Mat bullet_g = pg * h.ad * ctx.triple.g.basis().transpose();        // kg x kg
  Mat bullet_g_inv = pg * h.ad_inv * ctx.triple.g.basis().transpose();

  // on the embedded g: E . bullet_g . (coordinates in g_image)
  Mat e_coords = *(e.transpose() * e).inverse() * e.transpose();  // q -> g coords on g_image
  Mat on_g = e * bullet_g * e_coords * ctx.mg.gpd.s;  // applied to the s_q part

  // on ker(s_q): w' solves <w', E xi> = <w, E (h^{-1} . xi)> for all xi
  const Mat& k = ctx.mg.gpd.ker_s.basis();  // rows span ker s_q
  Mat pairing = (k * gq * e).transpose();   // kg x dim ker s, invertible
  auto pairing_inv = pairing.inverse();
  if (!pairing_inv) throw Error("bullet_on_q: ker(s) does not pair with g (internal)");
  // rhs matrix: for w = columns of K^T, rhs_j = <w, E bullet_g_inv e_j>
  Mat rhs = (e * bullet_g_inv).transpose() * gq;  // kg x q, applied to w
  Mat ker_part = k.transpose() * *pairing_inv * rhs * (Mat::identity(qd) - ctx.mg.gpd.s);
  return on_g + ker_part;
}

Vec bullet_on_q(const SemidirectContext& ctx, const GroupElement& h, const Vec& lambda) {
  return bullet_on_q_matrix(ctx, h) * lambda;
}

Vec anchor_on_q(const SemidirectContext& ctx, const GroupElement& h, const Vec& lambda) {
  return dressing_field(ctx.triple, h, ctx.qp.fq * lambda);
}

Vec sd_source(const SemidirectContext& ctx, const SemidirectElement& e) {
  return ctx.mg.gpd.s * e.lambda;
}

Vec sd_target(const SemidirectContext& ctx, const SemidirectElement& e) {
  return bullet_on_q(ctx, e.h, ctx.mg.gpd.t * e.lambda);
}

bool sd_composable(const SemidirectContext& ctx, const SemidirectElement& a,
                   const SemidirectElement& b) {
  return sd_source(ctx, a) == sd_target(ctx, b);
}

SemidirectElement sd_compose(const SemidirectContext& ctx, const SemidirectElement& a,
                             const SemidirectElement& b) {
  if (!sd_composable(ctx, a, b)) throw Error("sd_compose: not composable");
  GroupElement h2inv = group_inverse(b.h);
  Vec shifted = bullet_on_q(ctx, h2inv, a.lambda - ctx.mg.gpd.s * a.lambda);
  return {group_product(ctx.triple, ctx.rep, a.h, b.h), b.lambda + shifted};
}

SemidirectElement sd_invert(const SemidirectContext& ctx, const SemidirectElement& e) {
  Vec lam_inv = invert(ctx.mg.gpd, e.lambda);
  return {group_inverse(e.h), bullet_on_q(ctx, e.h, lam_inv)};
}

}  // namespace dirac
