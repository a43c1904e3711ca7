#include "dirac/matrix.hpp"

#include <sstream>

namespace dirac {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error("matrix data size mismatch");
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix initializer");
    for (const auto& x : r) data_.push_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_strings(std::initializer_list<std::initializer_list<const char*>> rows) {
  Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error("ragged matrix initializer");
    std::size_t j = 0;
    for (const char* s : r) m.at(i, j++) = rat_parse(s);
    ++i;
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error("row size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
  Mat r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
  Mat r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error("matrix-vector shape mismatch");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::operator*(const Rat& c) const {
  Mat r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_symmetric() const { return is_square() && *this == transpose(); }

Echelon Mat::rref() const {
  Echelon e{*this, {}, 0};
  Mat& m = e.mat;
  std::size_t pr = 0;  // current pivot row
  for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
    std::size_t sel = pr;
    while (sel < rows_ && m.at(sel, pc) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    Rat inv = Rat(1) / m.at(pr, pc);
    for (std::size_t j = pc; j < cols_; ++j) m.at(pr, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || m.at(i, pc) == 0) continue;
      Rat f = m.at(i, pc);
      for (std::size_t j = pc; j < cols_; ++j) m.at(i, j) -= f * m.at(pr, j);
    }
    e.pivots.push_back(pc);
    ++pr;
  }
  e.rank = pr;
  return e;
}

std::size_t Mat::rank() const { return rref().rank; }

Mat Mat::nullspace() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(free_cols.size(), cols_);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    std::size_t fc = free_cols[b];
    basis.at(b, fc) = 1;
    for (std::size_t r = 0; r < e.rank; ++r) basis.at(b, e.pivots[r]) = -e.mat.at(r, fc);
  }
  // canonicalize so that callers can compare nullspaces syntactically
  Echelon be = basis.rref();
  return be.mat.submatrix(0, 0, be.rank, cols_);
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error("rhs size mismatch in solve");
  Mat aug = hstack(Mat::from_rows(
      [&] {
        std::vector<Vec> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = Vec{b[i]};
        return c;
      }(),
      1));
  Echelon e = aug.rref();
  // inconsistent iff a pivot lands in the rhs column
  for (auto p : e.pivots)
    if (p == cols_) return std::nullopt;
  Vec x(cols_, Rat(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.mat.at(r, cols_);
  return x;
}

std::optional<Mat> Mat::solve_matrix(const Mat& b) const {
  if (b.rows() != rows_) throw Error("rhs shape mismatch in solve_matrix");
  Mat aug = hstack(b);
  Echelon e = aug.rref();
  for (auto p : e.pivots)
    if (p >= cols_) return std::nullopt;
  Mat x(cols_, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.mat.at(r, cols_ + j);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (!is_square()) throw Error("inverse of non-square matrix");
  Mat aug = hstack(identity(rows_));
  Echelon e = aug.rref();
  if (e.rank < rows_ || (e.rank > 0 && e.pivots.back() >= cols_)) return std::nullopt;
  for (std::size_t r = 0; r < e.rank; ++r)
    if (e.pivots[r] != r) return std::nullopt;
  if (e.rank != rows_) return std::nullopt;
  return e.mat.submatrix(0, cols_, rows_, cols_);
}

Rat Mat::determinant() const {
  if (!is_square()) throw Error("determinant of non-square matrix");
  Mat m = *this;
  Rat det(1);
  std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m.at(sel, c) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

Mat Mat::vstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw Error("vstack width mismatch");
  Mat r(rows_ + o.rows_, cols_);
  r.data_ = data_;
  r.data_.insert(r.data_.end(), o.data_.begin(), o.data_.end());
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) throw Error("hstack height mismatch");
  Mat r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error("submatrix out of range");
  Mat r(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_str(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch in +");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch in -");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch in dot");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec slice(const Vec& v, std::size_t begin, std::size_t end) {
  if (begin > end || end > v.size()) throw Error("slice out of range");
  return Vec(v.begin() + begin, v.begin() + end);
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

}  // namespace dirac
