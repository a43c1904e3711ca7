#include "dirac/manin.hpp"

namespace dirac {

bool check_ad_invariant_bivector(const LieAlgebra& l, const SymBivector& beta) {
  if (beta.dim() != l.dim()) throw Error("bivector dimension mismatch");
  // beta lives in S^2 d, so invariance reads ad(x) B + B ad(x)^T = 0;
  // equivalently beta# intertwines the coadjoint and adjoint actions
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Mat ad = l.adjoint_basis(i);
    if (!(ad * beta.gram() + beta.gram() * ad.transpose()).is_zero()) return false;
  }
  return true;
}

namespace {

// first ann(g) vector whose sharp image leaves g, as a coisotropy witness
std::string coisotropy_witness(const Subspace& g, const SymBivector& beta) {
  Subspace ann = annihilator(g);
  for (std::size_t i = 0; i < ann.dim(); ++i) {
    Vec mu = ann.basis_vector(i);
    if (!g.contains(beta.sharp(mu))) return "ann(g) covector " + vec_str(mu);
  }
  return "";
}

std::string subalgebra_witness(const LieAlgebra& l, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec br = l.bracket(s.basis_vector(a), s.basis_vector(b));
      if (!s.contains(br))
        return "bracket of basis rows (" + std::to_string(a) + "," + std::to_string(b) +
               ") = " + vec_str(br) + " escapes";
    }
  return "";
}

}  // namespace

TripleReport validate_triple(const DiracManinTriple& t) {
  TripleReport rep;
  std::size_t n = t.dim();
  if (t.beta.dim() != n || t.g.ambient_dim() != n || t.h.ambient_dim() != n)
    throw Error("triple components have inconsistent dimensions");

  JacobiReport jac = check_jacobi(t.d);
  rep.checks.add("d satisfies Jacobi", jac.ok,
                 jac.ok ? ""
                        : "triple (" + std::to_string(jac.i) + "," + std::to_string(jac.j) + "," +
                              std::to_string(jac.k) + ") defect " + vec_str(jac.defect));

  bool ad_inv = check_ad_invariant_bivector(t.d, t.beta);
  rep.checks.add("beta ad-invariant", ad_inv, ad_inv ? "" : "coadjoint defect on some basis vector");

  bool g_sub = is_subalgebra(t.d, t.g);
  rep.checks.add("g subalgebra", g_sub, g_sub ? "" : subalgebra_witness(t.d, t.g));

  bool g_coiso = is_coisotropic(t.g, t.beta);
  rep.checks.add("g beta-coisotropic", g_coiso, g_coiso ? "" : coisotropy_witness(t.g, t.beta));

  bool h_sub = is_subalgebra(t.d, t.h);
  rep.checks.add("h subalgebra", h_sub, h_sub ? "" : subalgebra_witness(t.d, t.h));

  bool complement = (t.g.dim() + t.h.dim() == n) && intersect(t.g, t.h).dim() == 0;
  rep.checks.add("g + h = d (direct)", complement,
                 complement ? "" : "dim g = " + std::to_string(t.g.dim()) + ", dim h = " +
                                       std::to_string(t.h.dim()) + ", intersection dim = " +
                                       std::to_string(intersect(t.g, t.h).dim()));

  rep.checks.merge(check_equivariance(t));

  rep.exact = false;
  if (t.beta.nondegenerate()) {
    SymBilinearForm metric(*t.beta.gram().inverse());
    rep.exact = orth_complement(t.g, metric) == t.g;
  }
  return rep;
}

Checklist check_equivariance(const DiracManinTriple& t) {
  Checklist cl;
  for (std::size_t s = 0; s < t.samples.size(); ++s) {
    const Mat& a = t.samples[s];
    std::string tag = "sample " + std::to_string(s);
    if (a.rows() != t.dim() || a.cols() != t.dim()) {
      cl.add(tag + " well-formed", false, "wrong shape");
      continue;
    }
    bool invertible = a.inverse().has_value();
    bool morph = invertible && check_morphism(t.d, t.d, a);
    cl.add(tag + " in Aut(d)", morph, morph ? "" : "not an automorphism");
    bool beta_ok = pushforward(a, t.beta) == t.beta;
    cl.add(tag + " preserves beta", beta_ok, beta_ok ? "" : "A beta A^T differs");
    bool h_ok = image(a, t.h) == t.h;
    cl.add(tag + " preserves h", h_ok, h_ok ? "" : "A(h) != h");
  }
  // infinitesimal generator conditions for the h-subalgebra
  for (std::size_t j = 0; j < t.h.dim(); ++j) {
    Vec tau = t.h.basis_vector(j);
    Mat ad = t.d.adjoint(tau);
    bool pres = image(ad, t.h).dim() == 0 || t.h.contains(image(ad, t.h));
    cl.add("generator " + std::to_string(j) + " preserves h", pres,
           pres ? "" : "[tau, h] escapes h for tau = " + vec_str(tau));
    Mat adj = t.d.adjoint(tau);
    bool kills = (adj * t.beta.gram() + t.beta.gram() * adj.transpose()).is_zero();
    cl.add("generator " + std::to_string(j) + " annihilates beta", kills,
           kills ? "" : "invariance defect for tau = " + vec_str(tau));
  }
  return cl;
}

Double build_double(const LieAlgebra& d, const SymBivector& beta) {
  std::size_t n = d.dim();
  if (beta.dim() != n) throw Error("build_double: dimension mismatch");
  if (!check_ad_invariant_bivector(d, beta))
    throw Error("build_double: beta is not ad-invariant");

  const Mat& b = beta.gram();
  std::vector<BracketRule> rules;
  // [d, d] block
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c(2 * n, Rat(0));
      Vec br = d.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) c[k] = br[k];
      rules.push_back({i, j, c});
    }
  // [lambda, mu] = coadjoint action
  for (std::size_t i = 0; i < n; ++i) {
    Mat coad = d.coadjoint_basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec c(2 * n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) c[n + k] = coad.at(k, j);
      rules.push_back({i, n + j, c});
    }
  }
  // [mu1, mu2]_beta = [beta#(mu1), mu2]
  for (std::size_t i = 0; i < n; ++i) {
    Mat coad_sharp = d.coadjoint(b.col(i));  // coadjoint(beta# e_i*)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c(2 * n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) c[n + k] = coad_sharp.at(k, j);
      rules.push_back({n + i, n + j, c});
    }
  }
  std::vector<std::string> labels;
  for (const auto& s : d.labels()) labels.push_back(s);
  for (const auto& s : d.labels()) labels.push_back(s + "*");
  LieAlgebra dtilde(2 * n, rules, labels);

  // skewness of the d*-bracket is equivalent to ad-invariance of beta;
  // verified here so a failure cannot slip past construction
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec m1(n, Rat(0)), m2(n, Rat(0));
      m1[i] = 1;
      m2[j] = 1;
      Vec lhs = d.coadjoint(beta.sharp(m1)) * m2 + d.coadjoint(beta.sharp(m2)) * m1;
      if (!is_zero(lhs)) throw Error("build_double: d*-bracket is not skew (internal)");
    }

  Mat gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram.at(i, n + i) = 1;
    gram.at(n + i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) gram.at(n + i, n + j) = b.at(i, j);
  }
  MetrizedLieAlgebra metrized{dtilde, SymBilinearForm(gram)};

  JacobiReport jac = check_jacobi(dtilde);
  if (!jac.ok) throw Error("build_double: Jacobi fails on the double (invalid input)");
  if (!check_metrized(metrized)) throw Error("build_double: metric not ad-invariant (internal)");

  Double out;
  out.dtilde = metrized;
  out.s_map = Mat::identity(n).hstack(Mat(n, n));
  out.t_map = Mat::identity(n).hstack(b);
  out.beta_tilde = SymBivector(*gram.inverse());
  return out;
}

Reduced::Reduced(const MetrizedLieAlgebra& m, const Subspace& c) : c_(c) {
  std::size_t n = m.dim();
  if (c.ambient_dim() != n) throw Error("reduce_coisotropic: dimension mismatch");
  if (!is_subalgebra(m.algebra, c)) throw Error("reduce_coisotropic: c is not a subalgebra");
  perp_ = orth_complement(c, m.metric);
  if (!c.contains(perp_)) throw Error("reduce_coisotropic: c^perp not contained in c");
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < perp_.dim(); ++b)
      if (!perp_.contains(m.algebra.bracket(c.basis_vector(a), perp_.basis_vector(b))))
        throw Error("reduce_coisotropic: c^perp is not an ideal in c");

  std::size_t k = c.dim();
  const Mat& cb = c.basis();
  // c^perp in c-coordinates
  std::vector<Vec> perp_coords;
  for (std::size_t i = 0; i < perp_.dim(); ++i)
    perp_coords.push_back(c.coordinates(perp_.basis_vector(i)));
  QuotientSpace qs = quotient(k, Subspace::span(k, perp_coords));
  std::size_t qd = qs.dim();

  embed_mat_ = cb.transpose() * qs.section;  // n x qd

  // project = quotient projection composed with c-coordinates; the
  // coordinate solve (C C^T)^{-1} C is exact since C has full row rank
  Mat coord = *(cb * cb.transpose()).inverse() * cb;
  project_amb_ = qs.projection * coord;

  std::vector<BracketRule> rules;
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = i + 1; j < qd; ++j) {
      Vec br = m.algebra.bracket(embed_mat_.col(i), embed_mat_.col(j));
      rules.push_back({i, j, project_amb_ * br});
    }
  LieAlgebra qalg(qd, rules);

  Mat gram(qd, qd);
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = i; j < qd; ++j)
      gram.at(i, j) = gram.at(j, i) = m.metric.eval(embed_mat_.col(i), embed_mat_.col(j));
  SymBilinearForm metric(gram);
  if (!metric.nondegenerate())
    throw Error("reduce_coisotropic: reduced metric degenerate (internal)");
  if (!check_jacobi(qalg).ok) throw Error("reduce_coisotropic: Jacobi fails on quotient (internal)");
  q_ = {qalg, metric};
}

Vec Reduced::project(const Vec& v) const {
  if (!c_.contains(v)) throw Error("Reduced::project: vector outside c");
  return project_amb_ * v;
}

Reduced reduce_coisotropic(const MetrizedLieAlgebra& m, const Subspace& c) {
  return Reduced(m, c);
}

QPair build_q_pair(const DiracManinTriple& t) {
  std::size_t n = t.dim();
  if (!check_ad_invariant_bivector(t.d, t.beta))
    throw Error("build_q_pair: beta not ad-invariant");
  if (!is_subalgebra(t.d, t.g)) throw Error("build_q_pair: g not a subalgebra");
  if (!is_coisotropic(t.g, t.beta)) throw Error("build_q_pair: g not beta-coisotropic");

  QPair out;
  out.dbl = build_double(t.d, t.beta);
  Subspace c = preimage(out.dbl.s_map, t.g);
  Reduced red = reduce_coisotropic(out.dbl.dtilde, c);
  out.q = red.algebra();
  std::size_t qd = out.q.dim();
  if (qd != 2 * t.g.dim()) throw Error("build_q_pair: dim q != 2 dim g (internal)");
  out.gamma_q = SymBivector(*out.q.metric.gram().inverse());

  // t must vanish on c^perp for f_q to descend
  for (std::size_t i = 0; i < red.perp().dim(); ++i)
    if (!is_zero(out.dbl.t_map * red.perp().basis_vector(i)))
      throw Error("build_q_pair: t does not vanish on the perp (inconsistent input)");
  out.fq = out.dbl.t_map * red.embed_mat();

  // embed g through d in the double
  std::size_t kg = t.g.dim();
  out.g_embed = Mat(qd, kg);
  for (std::size_t j = 0; j < kg; ++j) {
    Vec amb(2 * n, Rat(0));
    Vec gj = t.g.basis_vector(j);
    for (std::size_t i = 0; i < n; ++i) amb[i] = gj[i];
    Vec w = red.project(amb);
    for (std::size_t i = 0; i < qd; ++i) out.g_embed.at(i, j) = w[i];
  }
  out.g_image = Subspace(qd, out.g_embed.transpose());

  // internal consistency checks for f_q
  if (out.fq * out.g_embed != t.g.basis().transpose())
    throw Error("build_q_pair: f_q does not restrict to the inclusion (internal)");
  if (!check_morphism(out.q.algebra, t.d, out.fq))
    throw Error("build_q_pair: f_q is not a morphism (internal)");
  if (pushforward(out.fq, out.gamma_q) != t.beta)
    throw Error("build_q_pair: f_q(gamma_q) != beta (internal)");
  if (orth_complement(out.g_image, out.q.metric) != out.g_image)
    throw Error("build_q_pair: embedded g not Lagrangian (internal)");

  // canonical groupoid target t_q = g_embed . pr_g . f_q when h is present
  if (t.h.dim() + t.g.dim() == n && intersect(t.g, t.h).dim() == 0) {
    Mat tq = out.g_embed * g_coordinate_projection(t) * out.fq;
    out.t_q = tq;
    out.r = Subspace(qd, tq.nullspace());
  }
  return out;
}

Mat g_coordinate_projection(const DiracManinTriple& t) {
  Mat tmat = t.g.basis().vstack(t.h.basis());
  auto inv = tmat.inverse();
  if (!inv) throw Error("g + h is not a splitting of d");
  return inv->transpose().submatrix(0, 0, t.g.dim(), t.dim());
}

Mat pr_g(const DiracManinTriple& t) { return t.g.basis().transpose() * g_coordinate_projection(t); }

Mat pr_h(const DiracManinTriple& t) { return Mat::identity(t.dim()) - pr_g(t); }

SymBivector build_beta(const SymBivector& gamma_g, const Mat& phi, const LieAlgebra& d,
                       const Subspace& g, const Subspace& h) {
  std::size_t n = d.dim(), kg = g.dim(), kh = h.dim();
  if (kg + kh != n || intersect(g, h).dim() != 0) throw Error("build_beta: split invalid");
  if (gamma_g.dim() != kg || phi.rows() != kg || phi.cols() != kh)
    throw Error("build_beta: shape mismatch");
  Mat tmat = g.basis().vstack(h.basis());
  Mat adapted(n, n);
  for (std::size_t i = 0; i < kg; ++i)
    for (std::size_t j = 0; j < kg; ++j) adapted.at(i, j) = gamma_g.gram().at(i, j);
  for (std::size_t i = 0; i < kg; ++i)
    for (std::size_t j = 0; j < kh; ++j) {
      adapted.at(i, kg + j) = phi.at(i, j);
      adapted.at(kg + j, i) = phi.at(i, j);
    }
  SymBivector beta(tmat.transpose() * adapted * tmat);
  if (!is_coisotropic(g, beta)) throw Error("build_beta: g not coisotropic for result (internal)");
  return beta;
}

GammaPhi extract_gamma_phi(const DiracManinTriple& t) {
  std::size_t kg = t.g.dim(), kh = t.h.dim(), n = t.dim();
  Mat p = g_coordinate_projection(t);
  SymBivector gamma_g = pushforward(p, t.beta);
  Mat tmat = t.g.basis().vstack(t.h.basis());
  Mat tinv = *tmat.inverse();
  Mat phi(kg, kh);
  for (std::size_t j = 0; j < kh; ++j) {
    Vec mu = tinv.col(kg + j);  // the j-th adapted h* covector
    Vec col = p * t.beta.sharp(mu);
    for (std::size_t i = 0; i < kg; ++i) phi.at(i, j) = col[i];
  }
  (void)n;
  return {gamma_g, phi};
}

}  // namespace dirac
