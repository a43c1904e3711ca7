#ifndef DIRAC_HOMOGENEOUS_HPP
#define DIRAC_HOMOGENEOUS_HPP

#include "dirac/dressing.hpp"

namespace dirac {

/// K-sample: compatible automorphism pair (A_n of n, A_d of d), with an
/// optional group-element matrix in the ambient rep for group-level
/// descent checks.
struct KSample {
  Mat a_n;
  Mat a_d;
  std::optional<Mat> rep_matrix;
};

/// Theorem-D datum: a metrized Lie algebra (n, gamma_n) with a Lagrangian
/// subalgebra u, an isotropy subalgebra k inside u, and a morphism
/// f_n: n -> d with f_n(gamma_n) = beta. The stored form is the metric on
/// n; gamma_n in S^2 n is its inverse.
struct ClassificationData {
  LieAlgebra n;
  SymBilinearForm metric_n;
  Subspace u;
  Subspace k;
  Mat f_n;  // d.dim x n.dim
  std::vector<KSample> samples;
};

/// Robinson datum: a K-invariant beta-coisotropic subalgebra c of d with
/// c cap h = k.
struct DSample {
  Mat a_d;
  std::optional<Mat> rep_matrix;
};

struct RobinsonDatum {
  Subspace c;
  Subspace k;
  std::vector<DSample> samples;
};

/// LA-stage datum: (u, K) with a Harish-Chandra morphism f_u into (d, H).
struct LAClassData {
  LieAlgebra u_alg;
  Subspace k;
  Mat f_u;  // d.dim x u_alg.dim
  std::vector<KSample> samples;
};

Checklist validate_classification(const ClassificationData& data, const DiracManinTriple& t);
Checklist validate_la(const LAClassData& data, const DiracManinTriple& t);

/// F_n: q -> n with <F_n(lambda), zeta>_n = <lambda, pr_g(f_n(zeta))>_q.
/// Vanishes on the embedded g.
Mat build_F_n(const ClassificationData& data, const DiracManinTriple& t, const QPair& qp);

/// The groupoid module carried by the datum: moment emb_g(pr_g(f_n .)),
/// core action F_n. All moment_to_action checks apply.
LinearModule classification_module(const ClassificationData& data, const DiracManinTriple& t,
                                   const QPair& qp, const MetrizedLinearGroupoid& mg);

/// Normal form of the Dirac action on H x_K n: moment and groupoid action
/// over the semidirect product H x| q.
class NormalForm {
 public:
  NormalForm(ClassificationData data, const SemidirectContext& ctx);

  /// u_P(h, zeta) = h . pr_g(f_n(zeta)), ambient in g.
  Vec moment(const GroupElement& h, const Vec& zeta) const;
  /// Same point embedded in q coordinates (for composability with s_q).
  Vec moment_in_q(const GroupElement& h, const Vec& zeta) const;
  bool composable(const SemidirectElement& a, const GroupElement& h, const Vec& zeta) const;
  /// (g, lambda) o (h, zeta) = (gh, zeta + F_n(h^{-1} . lambda)).
  std::pair<GroupElement, Vec> action(const SemidirectElement& a, const GroupElement& h,
                                      const Vec& zeta) const;
  /// Anchor in left trivialization: the dressing field of f_n(zeta).
  Vec anchor(const GroupElement& h, const Vec& zeta) const;

  const Mat& f_n() const { return data_.f_n; }
  const Mat& F_n() const { return big_f_; }
  const ClassificationData& data() const { return data_; }
  const SemidirectContext& ctx() const { return *ctx_; }

 private:
  ClassificationData data_;
  const SemidirectContext* ctx_;
  Mat big_f_;   // F_n: q -> n
  Mat u_in_q_;  // emb_g . pr_g . f_n : n -> q
};

/// p = k^perp/k with the reduced metric, l = image of u. The bracket is
/// attached when k^perp is a subalgebra with [k^perp, k] inside k.
struct FiberReduction {
  std::size_t p_dim = 0;
  SymBilinearForm metric_p;
  std::optional<LieAlgebra> algebra_p;
  Subspace l;
  Mat embed;    // n x p_dim
  Mat project;  // p_dim x n, meaningful on k^perp
};

FiberReduction reduce_fibers(const ClassificationData& data);

/// f_n restricted to u is injective and f_n(u) cap h = f_n(k).
bool check_transitive(const ClassificationData& data, const DiracManinTriple& t);

ClassificationData robinson_build(const RobinsonDatum& datum, const DiracManinTriple& t);

/// Constructs the comparison map zeta + f_n*(mu) -> [f_n(zeta) + mu] onto
/// the reduction of c x| d*_beta by its radical, for c = f_n(u), and
/// verifies it is a well-defined isometric Lie isomorphism.
Checklist verify_robinson_iso(const ClassificationData& data, const DiracManinTriple& t);

struct ExactCaseResult {
  bool ok = false;
  Subspace c;  // classifying Lagrangian subalgebra when ok
};

/// For exact triples: dim n = dim d and f_n bijective, returning the
/// classifying c = f_n(u). Errors on non-exact triples.
ExactCaseResult check_exact_case(const ClassificationData& data, const DiracManinTriple& t);

/// u_L(h, zeta mod k) = pr_g(Ad_h f_u(zeta)).
Vec la_moment(const LAClassData& data, const DiracManinTriple& t, const GroupElement& h,
              const Vec& zeta);

struct SearchConstraints {
  bool lagrangian = false;
  std::optional<std::size_t> dim;
  Subspace k;               // required intersection with h
  std::vector<Mat> samples; // invariance matrices on d
};

/// All subspaces spanned by nonempty subsets of the candidates that are
/// beta-coisotropic subalgebras with c cap h = k (optionally Lagrangian,
/// optionally of fixed dimension, optionally sample-invariant). Output is
/// deduplicated and ordered by ascending subset bitmask; the parallel and
/// serial paths return identical lists.
std::vector<Subspace> search_coisotropic(const DiracManinTriple& t,
                                         const std::vector<Vec>& candidates,
                                         const SearchConstraints& constraints);
std::vector<Subspace> search_coisotropic_serial(const DiracManinTriple& t,
                                                const std::vector<Vec>& candidates,
                                                const SearchConstraints& constraints);
std::vector<Subspace> search_coisotropic_parallel(const DiracManinTriple& t,
                                                  const std::vector<Vec>& candidates,
                                                  const SearchConstraints& constraints);

}  // namespace dirac

#endif
