#ifndef DIRAC_MANIN_HPP
#define DIRAC_MANIN_HPP

#include <optional>

#include "dirac/checks.hpp"
#include "dirac/lie_algebra.hpp"

namespace dirac {

/// (d, g, h)_beta: an ad-invariant beta in S^2 d, a beta-coisotropic
/// subalgebra g, and a complementary subalgebra h. Samples are claimed
/// Ad_h automorphism matrices of d; all H-equivariance statements are
/// checked against them pointwise.
struct DiracManinTriple {
  LieAlgebra d;
  SymBivector beta;
  Subspace g;
  Subspace h;
  std::vector<Mat> samples;

  std::size_t dim() const { return d.dim(); }
};

/// true iff coadjoint(e_i) gram + gram coadjoint(e_i)^T = 0 for all i.
bool check_ad_invariant_bivector(const LieAlgebra& l, const SymBivector& beta);

struct TripleReport {
  Checklist checks;
  bool exact = false;  // beta nondegenerate and g Lagrangian for beta^{-1}
  bool ok() const { return checks.ok(); }
};

TripleReport validate_triple(const DiracManinTriple& t);

/// Per-sample automorphism / beta / h checks plus the infinitesimal
/// h-generator conditions.
Checklist check_equivariance(const DiracManinTriple& t);

/// The semidirect product d x| d*_beta with the metric
/// <l1+m1, l2+m2> = <l1,m2> + <l2,m1> + beta(m1,m2), in the block basis
/// (d, d*). s(l+m) = l and t(l+m) = l + beta#(m).
struct Double {
  MetrizedLieAlgebra dtilde;
  Mat s_map;  // n x 2n
  Mat t_map;  // n x 2n
  SymBivector beta_tilde;  // dual to the metric
};

Double build_double(const LieAlgebra& d, const SymBivector& beta);

/// Reduction c/c^perp of a metrized Lie algebra by a coisotropic
/// subalgebra. Fails loudly if c is not a subalgebra, c^perp is not inside
/// c, or c^perp is not an ideal in c.
class Reduced {
 public:
  Reduced(const MetrizedLieAlgebra& m, const Subspace& c);

  const MetrizedLieAlgebra& algebra() const { return q_; }
  const Subspace& c() const { return c_; }
  const Subspace& perp() const { return perp_; }
  std::size_t dim() const { return q_.dim(); }

  /// Quotient coordinates of an ambient vector; throws if v is outside c.
  Vec project(const Vec& v) const;
  /// Ambient representative of a quotient vector.
  Vec embed(const Vec& w) const { return embed_mat_ * w; }
  const Mat& embed_mat() const { return embed_mat_; }
  /// q x n matrix computing project(); only meaningful on vectors in c.
  const Mat& project_ambient() const { return project_amb_; }

 private:
  MetrizedLieAlgebra q_;
  Subspace c_, perp_;
  Mat embed_mat_;    // n x dim q
  Mat project_amb_;  // dim q x n
};

Reduced reduce_coisotropic(const MetrizedLieAlgebra& m, const Subspace& c);

/// Metrized Lie algebra with a Lagrangian subalgebra, optionally carrying
/// a morphism into some d.
struct ManinPair {
  MetrizedLieAlgebra q;
  Subspace g;
  std::optional<Mat> fq;
};

/// Manin pair (q, g)_gamma with the morphism f_q from the reduction of the
/// double by s^{-1}(g). The canonical complement r = ker(t_q) is available
/// when the triple carries h.
struct QPair {
  MetrizedLieAlgebra q;
  SymBivector gamma_q;   // inverse metric gram
  Mat fq;                // d.dim x q.dim, descent of t
  Mat g_embed;           // q.dim x dim g, the embedding of g
  Subspace g_image;      // image of g_embed, Lagrangian in q
  std::optional<Mat> t_q;       // q -> q, equals g_embed . pr_g . fq
  std::optional<Subspace> r;    // ker(t_q)
  Double dbl;

  ManinPair pair() const { return {q, g_image, fq}; }
};

QPair build_q_pair(const DiracManinTriple& t);

/// Assembles beta in S^2 d from gamma_g on g and phi: h* -> g, in the
/// adapted dual basis of the splitting d = g + h. gamma_g is written in
/// g-basis coordinates and phi maps adapted h*-coordinates to g-basis
/// coordinates.
SymBivector build_beta(const SymBivector& gamma_g, const Mat& phi, const LieAlgebra& d,
                       const Subspace& g, const Subspace& h);

struct GammaPhi {
  SymBivector gamma_g;  // on g-basis coordinates
  Mat phi;              // dim g x dim h
};

/// Inverse of build_beta: gamma_g = pr_g(beta), phi(nu) = pr_g(beta# nu).
GammaPhi extract_gamma_phi(const DiracManinTriple& t);

/// Projection d -> g-basis coordinates along h (top block of T^{-T} for
/// T = [basis g; basis h]).
Mat g_coordinate_projection(const DiracManinTriple& t);
/// Projections d -> d onto g (resp. h) along the other summand.
Mat pr_g(const DiracManinTriple& t);
Mat pr_h(const DiracManinTriple& t);

}  // namespace dirac

#endif
