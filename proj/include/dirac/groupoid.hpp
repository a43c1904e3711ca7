#ifndef DIRAC_GROUPOID_HPP
#define DIRAC_GROUPOID_HPP

#include "dirac/manin.hpp"

namespace dirac {

/// Unit-fiber picture of a VB-groupoid over a group: a vector space V with
/// unit subspace V0 and idempotent source/target maps onto V0. The
/// multiplication is the forced affine formula x o y = x + y - s(x); it is
/// not stored.
struct LinearGroupoid {
  std::size_t dim = 0;
  Subspace units;
  Mat s, t;

  // derived at construction
  Subspace ker_s, ker_t;
  QuotientSpace core;      // V / V0
  Mat core_from_ker_s;     // core coords of the ker(s) basis rows (columns)
  Mat core_from_ker_t;

  std::size_t core_dim() const { return core.dim(); }
  bool vacant() const { return core.dim() == 0; }
  bool composable(const Vec& x, const Vec& y) const { return s * x == t * y; }
};

LinearGroupoid make_groupoid(std::size_t dim, const Subspace& units, const Mat& s, const Mat& t);

Vec compose(const LinearGroupoid& g, const Vec& x, const Vec& y);
Vec invert(const LinearGroupoid& g, const Vec& x);

/// Basis (rows of a 2n-column matrix) of {(x,y) : s(x) = t(y)}.
Mat composable_pairs(const LinearGroupoid& g);

/// Pradines dual on V*: units = ann(V0); the dual source (resp. target) of
/// mu is the unique ann(V0) covector agreeing with mu on ker(t) (resp.
/// ker(s)). The characterizing pairing law
///   <mu o nu, v o w> = <mu, v> + <nu, w>
/// is verified on exhaustive bases of both composable subspaces; an error
/// here cannot fire on valid input.
LinearGroupoid dualize(const LinearGroupoid& g);

/// Module over a linear groupoid: moment u : P -> V0 and core action A
/// (used on ker s only), with action x o y = y + A(x - s(x)).
struct LinearModule {
  LinearGroupoid over;
  std::size_t p_dim = 0;
  Mat u;         // dim x p_dim, image inside units
  Mat core_act;  // p_dim x dim

  bool composable(const Vec& x, const Vec& y) const { return over.s * x == u * y; }
};

LinearModule make_module(const LinearGroupoid& g, std::size_t p_dim, const Mat& u,
                         const Mat& core_act);

Vec act(const LinearModule& m, const Vec& x, const Vec& y);

/// G acting on its own unit space, x o eta = t(x).
LinearModule units_module(const LinearGroupoid& g);
/// G acting on itself by left translation, u = t.
LinearModule left_translation_module(const LinearGroupoid& g);

/// Dual module over dualize(G), characterized by
/// <mu o rho, v o w> = <mu, v> + <rho, w>; moment is the dual of the
/// core-to-P map v -> v o 0. The pairing law is verified exhaustively.
LinearModule dual_module(const LinearGroupoid& g, const LinearModule& m);

/// Basis of the composable subspace {(x,y) : s(x) = u(y)} of V + P.
Mat module_composable_pairs(const LinearModule& m);

/// q =| g with its metric: s = 1 - pr_{r^perp}, t = 1 - pr_r (projections
/// along g), metric multiplicativity verified by polarization on the
/// composable subspace.
struct MetrizedLinearGroupoid {
  LinearGroupoid gpd;
  SymBilinearForm metric;
  Subspace g;  // = units
  Subspace r;  // = ker t
};

MetrizedLinearGroupoid from_manin_pair(const ManinPair& pair, const Subspace& r);

/// Metrized groupoid of a triple, with the canonical r = ker(pr_g o f_q).
MetrizedLinearGroupoid groupoid_of_qpair(const QPair& qp);

/// gamma_g = t(gamma_q) = -s(gamma_q) in g-basis coordinates; errors if
/// the two pushforwards disagree.
SymBivector gamma_g(const MetrizedLinearGroupoid& mg);

/// Module built from a moment map alone: F_p is determined by
/// <F_p(lambda), z>_P = <lambda, u(z)>_q, and the action is z + F_p(lambda).
/// Verifies u F_p = t - s, metric multiplicativity, and u_p(gamma_p) =
/// gamma_g; errors on a degenerate metric_p or an inadmissible u_map.
LinearModule moment_to_action(const MetrizedLinearGroupoid& mg, std::size_t p_dim,
                              const SymBilinearForm& metric_p, const Mat& u_map);

}  // namespace dirac

#endif
