#ifndef DIRAC_FORMS_HPP
#define DIRAC_FORMS_HPP

#include "dirac/matrix.hpp"
#include "dirac/subspace.hpp"

namespace dirac {

/// Symmetric bilinear form on a space V: <x,y> = x^T gram y. Used for
/// metrics; degenerate grams are allowed.
class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  explicit SymBilinearForm(Mat gram);
  static SymBilinearForm zero(std::size_t dim) { return SymBilinearForm(Mat(dim, dim)); }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }
  Rat eval(const Vec& x, const Vec& y) const { return dot(x, gram_ * y); }
  bool nondegenerate() const { return gram_.rank() == gram_.rows(); }

  bool operator==(const SymBilinearForm& o) const = default;

 private:
  Mat gram_;
};

/// Symmetric 2-tensor on the dual: beta(mu,nu) = mu^T gram nu, with sharp
/// map beta#(mu) = gram * mu into V.
class SymBivector {
 public:
  SymBivector() = default;
  explicit SymBivector(Mat gram);
  static SymBivector zero(std::size_t dim) { return SymBivector(Mat(dim, dim)); }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }
  Rat eval(const Vec& mu, const Vec& nu) const { return dot(mu, gram_ * nu); }
  Vec sharp(const Vec& mu) const { return gram_ * mu; }
  bool nondegenerate() const { return gram_.rank() == gram_.rows(); }

  bool operator==(const SymBivector& o) const = default;

 private:
  Mat gram_;
};

/// f(beta) for a linear map f: V -> W, gram_W = F gram_V F^T. Functorial in f.
SymBivector pushforward(const Mat& f, const SymBivector& beta);

/// beta vanishes on ann(U), equivalently beta#(ann U) is contained in U.
/// Both routes are evaluated; a disagreement would be an internal bug and
/// throws.
bool is_coisotropic(const Subspace& u, const SymBivector& beta);

}  // namespace dirac

#endif
