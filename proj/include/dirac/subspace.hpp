#ifndef DIRAC_SUBSPACE_HPP
#define DIRAC_SUBSPACE_HPP

#include <vector>

#include "dirac/matrix.hpp"

namespace dirac {

class SymBilinearForm;

/// Subspace of Q^n held by its unique RREF row basis. Two subspaces are
/// equal iff their basis matrices are identical, so equality, hashing and
/// reporting are all syntactic.
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes arbitrary spanning rows.
  Subspace(std::size_t ambient_dim, const Mat& spanning_rows);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Mat(0, ambient_dim)); }
  static Subspace full(std::size_t ambient_dim) { return Subspace(ambient_dim, Mat::identity(ambient_dim)); }
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; throws if v is outside.
  Vec coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;  // RREF rows, full row rank
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {mu in the dual : mu(x) = 0 for all x in s}.
Subspace annihilator(const Subspace& s);

/// {x : <x, v> = 0 for all v in s} for a (possibly degenerate) form.
Subspace orth_complement(const Subspace& s, const SymBilinearForm& form);

/// Image of a subspace under a linear map.
Subspace image(const Mat& f, const Subspace& s);
Subspace preimage(const Mat& f, const Subspace& s);

/// Deterministic coordinates on Q^n / kernel: the quotient is coordinatized
/// by the non-pivot columns of the kernel's RREF basis.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace kernel;
  Mat projection;  // (n - dim kernel) x n
  Mat section;     // n x (n - dim kernel); projection * section = identity
  std::size_t dim() const { return projection.rows(); }
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& kernel);

}  // namespace dirac

#endif
