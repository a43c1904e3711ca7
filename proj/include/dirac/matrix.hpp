#ifndef DIRAC_MATRIX_HPP
#define DIRAC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dirac/rational.hpp"

namespace dirac {

using Vec = std::vector<Rat>;

struct Echelon;

/// Dense matrix over Q. All arithmetic is exact; there is no floating-point
/// path anywhere in this library.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> data);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Row-major matrix from rational literals, e.g. {{"1","1/2"},{"0","1"}}.
  static Mat from_strings(std::initializer_list<std::initializer_list<const char*>> rows);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator*(const Rat& c) const;
  Mat operator-() const { return *this * Rat(-1); }
  bool operator==(const Mat& o) const = default;

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  /// Reduced row-echelon form: pivots are 1, pivot columns strictly
  /// increasing, zeros above and below pivots.
  Echelon rref() const;

  std::size_t rank() const;

  /// Basis of {x : Ax = 0}, rows in canonical (RREF) form.
  Mat nullspace() const;

  /// Unique solution of Ax = b when A is invertible; nullopt if A is
  /// singular or b is outside the column space. For non-square or singular
  /// A, returns some particular solution if one exists.
  std::optional<Vec> solve(const Vec& b) const;
  /// Columnwise solve: X with AX = B.
  std::optional<Mat> solve_matrix(const Mat& b) const;
  std::optional<Mat> inverse() const;
  Rat determinant() const;

  /// Stacks o below (hstack: to the right).
  Mat vstack(const Mat& o) const;
  Mat hstack(const Mat& o) const;
  Mat submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

struct Echelon {
  Mat mat;                          // full RREF, same shape as input
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
std::string vec_str(const Vec& v);
Vec slice(const Vec& v, std::size_t begin, std::size_t end);
Vec concat(const Vec& a, const Vec& b);

}  // namespace dirac

#endif
