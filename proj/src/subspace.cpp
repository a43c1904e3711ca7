#include "dirac/subspace.hpp"

#include "dirac/forms.hpp"

namespace dirac {

Subspace::Subspace(std::size_t ambient_dim, const Mat& spanning_rows) : ambient_(ambient_dim) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
    throw Error("spanning rows do not lie in Q^" + std::to_string(ambient_dim));
  Mat m = spanning_rows.rows() ? spanning_rows : Mat(0, ambient_dim);
  auto e = m.rref();
  basis_ = e.mat.submatrix(0, 0, e.rank, ambient_dim);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw Error("span: vector dimension mismatch");
  return Subspace(ambient_dim, Mat::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw Error("contains: dimension mismatch");
  // reduce v against the RREF basis
  Vec w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    // pivot column of row r is the first nonzero entry
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(r, p) == 0) ++p;
    if (w[p] != 0) {
      Rat f = w[p];
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(r, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  auto sol = basis_.transpose().solve(v);
  if (!sol) throw Error("coordinates: vector outside subspace");
  return *sol;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("sum: ambient mismatch");
  return Subspace(a.ambient_dim(), a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("intersect: ambient mismatch");
  // x in both spans: x = A^T p = B^T q; solve [A^T | -B^T] (p,q) = 0
  std::size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(a.ambient_dim());
  Mat sys = a.basis().transpose().hstack(-b.basis().transpose());
  Mat ker = sys.nullspace();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec pq = ker.row(i);
    Vec p(pq.begin(), pq.begin() + da);
    gens.push_back(a.basis().transpose() * p);
  }
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return Subspace(s.ambient_dim(), s.basis().nullspace());
}

Subspace orth_complement(const Subspace& s, const SymBilinearForm& form) {
  if (form.dim() != s.ambient_dim()) throw Error("orth_complement: dimension mismatch");
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return Subspace(s.ambient_dim(), (s.basis() * form.gram()).nullspace());
}

Subspace image(const Mat& f, const Subspace& s) {
  if (f.cols() != s.ambient_dim()) throw Error("image: dimension mismatch");
  return Subspace(f.rows(), s.basis() * f.transpose());
}

Subspace preimage(const Mat& f, const Subspace& s) {
  if (f.rows() != s.ambient_dim()) throw Error("preimage: dimension mismatch");
  // f(x) in S  <=>  ann(S) f x = 0
  Subspace ann = annihilator(s);
  if (ann.dim() == 0) return Subspace::full(f.cols());
  return Subspace(f.cols(), (ann.basis() * f).nullspace());
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& kernel) {
  if (kernel.ambient_dim() != ambient_dim) throw Error("quotient: kernel outside Q^n");
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.kernel = kernel;
  const Mat& k = kernel.basis();
  std::vector<bool> is_pivot(ambient_dim, false);
  std::vector<std::size_t> pivot_of_row(k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r) {
    std::size_t p = 0;
    while (p < ambient_dim && k.at(r, p) == 0) ++p;
    is_pivot[p] = true;
    pivot_of_row[r] = p;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  std::size_t qd = free_cols.size();
  // projection: subtract the kernel combination that clears pivot
  // coordinates, then read off the free coordinates
  q.projection = Mat(qd, ambient_dim);
  for (std::size_t a = 0; a < qd; ++a) {
    q.projection.at(a, free_cols[a]) = 1;
    for (std::size_t r = 0; r < k.rows(); ++r)
      q.projection.at(a, pivot_of_row[r]) = -k.at(r, free_cols[a]);
  }
  // section: the non-pivot-coordinate lift
  q.section = Mat(ambient_dim, qd);
  for (std::size_t a = 0; a < qd; ++a) q.section.at(free_cols[a], a) = 1;
  return q;
}

}  // namespace dirac
