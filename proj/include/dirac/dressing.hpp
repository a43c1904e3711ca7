#ifndef DIRAC_DRESSING_HPP
#define DIRAC_DRESSING_HPP

#include "dirac/groupoid.hpp"

namespace dirac {

/// Rational group element: an invertible matrix in a faithful rep of d
/// whose conjugation action normalizes the image of d. Validity against a
/// triple (Ad preserves h and beta) is checked at construction.
struct GroupElement {
  Mat matrix;
  Mat matrix_inv;
  Mat ad;      // induced automorphism of d
  Mat ad_inv;
};

/// Coordinates of Ad_h(lambda), solved exactly from
/// rho(Ad_h lambda) = h rho(lambda) h^{-1}. Errors if h does not
/// normalize the rep image.
Vec adjoint_of(const MatrixRep& rep, const Mat& h, const Vec& lambda);
/// The full matrix of Ad_h on d.
Mat adjoint_matrix(const MatrixRep& rep, const Mat& h);

/// Builds and validates a group element for the triple: Ad_h in Aut(d),
/// Ad_h(beta) = beta, Ad_h(h-subalgebra) = h-subalgebra.
GroupElement make_group_element(const DiracManinTriple& t, const MatrixRep& rep, const Mat& h);
GroupElement group_inverse(const GroupElement& e);
GroupElement group_product(const DiracManinTriple& t, const MatrixRep& rep,
                           const GroupElement& a, const GroupElement& b);

/// Dressing vector field in left trivialization:
/// rho(lambda)_h = Ad_{h^{-1}} pr_h(Ad_h lambda), an element of the
/// h-subalgebra returned in ambient d coordinates.
Vec dressing_field(const DiracManinTriple& t, const GroupElement& h, const Vec& lambda);

/// h . xi = pr_g(Ad_h xi) for xi in g.
Vec bullet_on_g(const DiracManinTriple& t, const GroupElement& h, const Vec& xi);
/// Moment of the E-hat module: pr_g(Ad_h lambda) for any lambda in d.
Vec ehat_moment(const DiracManinTriple& t, const GroupElement& h, const Vec& lambda);

struct StabilizerReport {
  Subspace kernel;          // of lambda -> dressing_field(h, lambda)
  bool equals_ad_inv_g;     // literal evaluation gives Ad_{h^{-1}}(g)
  bool equals_ad_g;         // the remark's stated form Ad_h(g)
  bool coisotropic;         // w.r.t. the triple's beta
};

StabilizerReport stabilizer_kernel(const DiracManinTriple& t, const GroupElement& h);

/// Canonical isotropic splitting of the exact case:
/// sigma(nu) = nu - 1/2 Ad_{h^{-1}} P Ad_h nu, where P projects onto g
/// along the metric orthogonal of the h-subalgebra. Requires an exact
/// triple and nu in the h-subalgebra.
Vec exact_splitting(const DiracManinTriple& t, const GroupElement& h, const Vec& nu);

/// The trivialization (tau, xi) -> tau + Ad_{h^{-1}} xi of the E-hat fiber,
/// with inverse lambda -> (dressing_field(lambda), pr_g(Ad_h lambda)).
Vec th_g_lift(const DiracManinTriple& t, const GroupElement& h, const Vec& tau, const Vec& xi);
std::pair<Vec, Vec> th_g_lift_inverse(const DiracManinTriple& t, const GroupElement& h,
                                      const Vec& lambda);

/// Everything needed to evaluate the semidirect product Hx|q =| g: the
/// triple, a faithful rep, the Manin pair q and its metrized groupoid.
struct SemidirectContext {
  DiracManinTriple triple;
  MatrixRep rep;
  QPair qp;
  MetrizedLinearGroupoid mg;
};

SemidirectContext make_semidirect_context(const DiracManinTriple& t, const MatrixRep& rep);

/// Bullet action of H on q: on g it is h . xi, on ker(s_q) it is the
/// unique metric-preserving extension; s_q and t_q are equivariant for it.
Vec bullet_on_q(const SemidirectContext& ctx, const GroupElement& h, const Vec& lambda);
Mat bullet_on_q_matrix(const SemidirectContext& ctx, const GroupElement& h);

/// Anchor of the action structure H x q at h: the dressing field of
/// f_q(lambda).
Vec anchor_on_q(const SemidirectContext& ctx, const GroupElement& h, const Vec& lambda);

struct SemidirectElement {
  GroupElement h;
  Vec lambda;  // in q coordinates
};

/// s(h, l) = s_q(l); t(h, l) = h . t_q(l), both in q coordinates (inside
/// the embedded g).
Vec sd_source(const SemidirectContext& ctx, const SemidirectElement& e);
Vec sd_target(const SemidirectContext& ctx, const SemidirectElement& e);
bool sd_composable(const SemidirectContext& ctx, const SemidirectElement& a,
                   const SemidirectElement& b);
/// (h1,l1) o (h2,l2) = (h1 h2, l2 + h2^{-1} . (l1 - s_q(l1))).
SemidirectElement sd_compose(const SemidirectContext& ctx, const SemidirectElement& a,
                             const SemidirectElement& b);
SemidirectElement sd_invert(const SemidirectContext& ctx, const SemidirectElement& e);

}  // namespace dirac

#endif
