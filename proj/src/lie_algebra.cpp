#include "dirac/lie_algebra.hpp"

namespace dirac {

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketRule>& rules,
                       std::vector<std::string> labels)
    : dim_(dim), sc_(dim * dim * dim, Rat(0)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim) throw Error("label count mismatch");
  auto slot = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& {
    return sc_[(i * dim_ + j) * dim_ + k];
  };
  std::vector<bool> seen(dim * dim, false);
  for (const auto& r : rules) {
    if (r.i >= dim || r.j >= dim || r.coeffs.size() != dim)
      throw Error("bracket rule out of range");
    if (r.i == r.j) {
      if (!is_zero(r.coeffs)) throw Error("[e_i, e_i] must vanish");
      continue;
    }
    std::size_t a = r.i, b = r.j;
    Vec c = r.coeffs;
    if (a > b) {
      std::swap(a, b);
      c = Rat(-1) * c;
    }
    if (seen[a * dim + b]) {
      // a repeated pair must agree with the antisymmetric completion
      for (std::size_t k = 0; k < dim; ++k)
        if (slot(a, b, k) != c[k]) throw Error("inconsistent antisymmetric bracket data");
      continue;
    }
    seen[a * dim + b] = true;
    for (std::size_t k = 0; k < dim; ++k) {
      slot(a, b, k) = c[k];
      slot(b, a, k) = -c[k];
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

LieAlgebra LieAlgebra::sl2() {
  // basis order (e, f, H)
  return LieAlgebra(3,
                    {{0, 1, Vec{0, 0, 1}},    // [e,f] = H
                     {2, 0, Vec{2, 0, 0}},    // [H,e] = 2e
                     {2, 1, Vec{0, -2, 0}}},  // [H,f] = -2f
                    {"e", "f", "H"});
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("bracket: dimension mismatch");
  Vec r(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

Mat LieAlgebra::adjoint(const Vec& x) const {
  if (x.size() != dim_) throw Error("adjoint: dimension mismatch");
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) += x[i] * c(i, j, k);
    }
  return m;
}

Mat LieAlgebra::adjoint_basis(std::size_t i) const {
  Vec x(dim_, Rat(0));
  x[i] = 1;
  return adjoint(x);
}

Mat LieAlgebra::coadjoint(const Vec& x) const { return -adjoint(x).transpose(); }
Mat LieAlgebra::coadjoint_basis(std::size_t i) const { return -adjoint_basis(i).transpose(); }

JacobiReport check_jacobi(const LieAlgebra& l) {
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = l.bracket(l.bracket_basis(i, j), [&] {
          Vec ek(n, Rat(0));
          ek[k] = 1;
          return ek;
        }());
        s = s + l.bracket(l.bracket_basis(j, k), [&] {
              Vec ei(n, Rat(0));
              ei[i] = 1;
              return ei;
            }());
        s = s + l.bracket(l.bracket_basis(k, i), [&] {
              Vec ej(n, Rat(0));
              ej[j] = 1;
              return ej;
            }());
        if (!is_zero(s)) return {false, i, j, k, s};
      }
  return {};
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s, bool ideal) {
  if (s.ambient_dim() != l.dim()) throw Error("is_subalgebra: dimension mismatch");
  std::size_t m = ideal ? l.dim() : s.dim();
  for (std::size_t a = 0; a < m; ++a) {
    Vec x;
    if (ideal) {
      x = Vec(l.dim(), Rat(0));
      x[a] = 1;
    } else {
      x = s.basis_vector(a);
    }
    for (std::size_t b = 0; b < s.dim(); ++b)
      if (!s.contains(l.bracket(x, s.basis_vector(b)))) return false;
  }
  return true;
}

bool check_morphism(const LieAlgebra& src, const LieAlgebra& tgt, const Mat& f) {
  if (f.rows() != tgt.dim() || f.cols() != src.dim())
    throw Error("check_morphism: shape mismatch");
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Vec lhs = f * src.bracket_basis(i, j);
      Vec rhs = tgt.bracket(f.col(i), f.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_morphism(const LieMorphism& f) { return check_morphism(f.source, f.target, f.matrix); }

SymBilinearForm killing_form(const LieAlgebra& l) {
  std::size_t n = l.dim();
  Mat k(n, n);
  std::vector<Mat> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = l.adjoint_basis(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat p = ad[i] * ad[j];
      Rat tr(0);
      for (std::size_t a = 0; a < n; ++a) tr += p.at(a, a);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return SymBilinearForm(k);
}

Mat MatrixRep::rho(const Vec& x) const {
  if (x.size() != algebra.dim()) throw Error("rho: dimension mismatch");
  Mat m(rep_dim, rep_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + images[i] * x[i];
  return m;
}

RepReport check_rep(const MatrixRep& r) {
  RepReport rep;
  std::size_t n = r.algebra.dim();
  if (r.images.size() != n) throw Error("check_rep: image count mismatch");
  for (std::size_t i = 0; i < n && rep.homomorphism; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat comm = r.images[i] * r.images[j] - r.images[j] * r.images[i];
      if (comm != r.rho(r.algebra.bracket_basis(i, j))) {
        rep.homomorphism = false;
        break;
      }
    }
  // faithful iff the coordinate map x -> rho(x) has zero kernel
  Mat coord(r.rep_dim * r.rep_dim, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < r.rep_dim; ++a)
      for (std::size_t b = 0; b < r.rep_dim; ++b)
        coord.at(a * r.rep_dim + b, j) = r.images[j].at(a, b);
  rep.faithful = coord.nullspace().rows() == 0;
  return rep;
}

SymBilinearForm trace_form(const MatrixRep& r) {
  std::size_t n = r.algebra.dim();
  Mat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat p = r.images[i] * r.images[j];
      Rat tr(0);
      for (std::size_t a = 0; a < r.rep_dim; ++a) tr += p.at(a, a);
      b.at(i, j) = tr;
      b.at(j, i) = tr;
    }
  return SymBilinearForm(b);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim(), m = b.dim();
  std::vector<BracketRule> rules;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c(n + m, Rat(0));
      Vec ab = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) c[k] = ab[k];
      rules.push_back({i, j, c});
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec c(n + m, Rat(0));
      Vec bb = b.bracket_basis(i, j);
      for (std::size_t k = 0; k < m; ++k) c[n + k] = bb[k];
      rules.push_back({n + i, n + j, c});
    }
  std::vector<std::string> labels;
  for (const auto& s : a.labels()) labels.push_back(s + "'");
  for (const auto& s : b.labels()) labels.push_back(s + "''");
  return LieAlgebra(n + m, rules, labels);
}

MetrizedLieAlgebra opposite(const MetrizedLieAlgebra& m) {
  return {m.algebra, SymBilinearForm(-m.metric.gram())};
}

bool metric_ad_invariant(const LieAlgebra& l, const SymBilinearForm& metric) {
  if (metric.dim() != l.dim()) throw Error("metric dimension mismatch");
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Mat ad = l.adjoint_basis(i);
    if (!(ad.transpose() * metric.gram() + metric.gram() * ad).is_zero()) return false;
  }
  return true;
}

bool check_metrized(const MetrizedLieAlgebra& m) {
  return m.metric.nondegenerate() && metric_ad_invariant(m.algebra, m.metric);
}

}  // namespace dirac
