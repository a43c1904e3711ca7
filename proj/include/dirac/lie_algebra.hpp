#ifndef DIRAC_LIE_ALGEBRA_HPP
#define DIRAC_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "dirac/forms.hpp"
#include "dirac/matrix.hpp"
#include "dirac/subspace.hpp"

namespace dirac {

/// One bracket entry [e_i, e_j] = sum_k coeffs[k] e_k, stored for i < j.
struct BracketRule {
  std::size_t i, j;
  Vec coeffs;
};

/// Lie algebra over Q given by its structure-constant tensor. Stored dense;
/// dimensions in this project stay small.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Brackets listed for i<j are completed antisymmetrically. Rules with
  /// i>j must be consistent with the completion; i==j must be zero.
  LieAlgebra(std::size_t dim, const std::vector<BracketRule>& rules,
             std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);
  static LieAlgebra sl2();  // basis (e, f, H): [H,e]=2e, [H,f]=-2f, [e,f]=H

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// ad(x): y -> [x,y] as a matrix.
  Mat adjoint(const Vec& x) const;
  Mat adjoint_basis(std::size_t i) const;
  /// Coadjoint with the convention <[x,mu], y> = -<mu, [x,y]>, so
  /// coadjoint(x) = -adjoint(x)^T.
  Mat coadjoint(const Vec& x) const;
  Mat coadjoint_basis(std::size_t i) const;

  /// Structural equality: labels are presentation only.
  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && sc_ == o.sc_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> sc_;  // c[i][j][k] flattened
  std::vector<std::string> labels_;
};

struct JacobiReport {
  bool ok = true;
  std::size_t i = 0, j = 0, k = 0;  // first failing triple when !ok
  Vec defect;                       // cyclic sum at that triple
};

JacobiReport check_jacobi(const LieAlgebra& l);

/// [S,S] in S, or [L,S] in S with the ideal flag.
bool is_subalgebra(const LieAlgebra& l, const Subspace& s, bool ideal = false);

struct LieMorphism {
  LieAlgebra source;
  LieAlgebra target;
  Mat matrix;  // target.dim x source.dim
};

bool check_morphism(const LieMorphism& f);
/// Bracket preservation for a raw matrix between two algebras.
bool check_morphism(const LieAlgebra& src, const LieAlgebra& tgt, const Mat& f);

/// K(x,y) = tr(ad x ad y).
SymBilinearForm killing_form(const LieAlgebra& l);

struct MatrixRep {
  LieAlgebra algebra;
  std::size_t rep_dim = 0;
  std::vector<Mat> images;  // one rep_dim x rep_dim matrix per basis vector

  Mat rho(const Vec& x) const;
};

struct RepReport {
  bool homomorphism = true;
  bool faithful = true;
};

RepReport check_rep(const MatrixRep& r);

/// B(x,y) = tr(rho(x) rho(y)).
SymBilinearForm trace_form(const MatrixRep& r);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Same brackets, negated metric.
struct MetrizedLieAlgebra;
MetrizedLieAlgebra opposite(const MetrizedLieAlgebra& m);

/// Lie algebra with a nondegenerate ad-invariant metric.
struct MetrizedLieAlgebra {
  LieAlgebra algebra;
  SymBilinearForm metric;

  std::size_t dim() const { return algebra.dim(); }
};

/// metric nondegenerate and <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
bool check_metrized(const MetrizedLieAlgebra& m);
bool metric_ad_invariant(const LieAlgebra& l, const SymBilinearForm& metric);

}  // namespace dirac

#endif
