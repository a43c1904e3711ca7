#ifndef DIRAC_TEST_SUPPORT_HPP
#define DIRAC_TEST_SUPPORT_HPP

#include <random>

#include "dirac/matrix.hpp"
#include "dirac/subspace.hpp"

namespace dirac::testing {

/// Deterministic generator for exact-arithmetic property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  /// Small rational with numerator in [-max, max] and denominator in {1,2,3}.
  Rat rat(int max = 4) {
    std::uniform_int_distribution<int> num(-max, max);
    std::uniform_int_distribution<int> den(1, 3);
    Rat r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  Vec vec(std::size_t n, int max = 4) {
    Vec v(n);
    for (auto& x : v) x = rat(max);
    return v;
  }

  Mat mat(std::size_t rows, std::size_t cols, int max = 4) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat(max);
    return m;
  }

  Mat symmetric(std::size_t n, int max = 4) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rat(max);
    return m;
  }

  Mat invertible(std::size_t n, int max = 4) {
    for (;;) {
      Mat m = mat(n, n, max);
      if (m.determinant() != 0) return m;
    }
  }

  Subspace subspace(std::size_t ambient, std::size_t target_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < target_dim; ++i) rows.push_back(vec(ambient));
    return Subspace::span(ambient, rows);
  }

  std::size_t index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(rng_);
  }

  /// Random complement of s inside Q^n.
  Subspace complement(const Subspace& s) {
    std::size_t n = s.ambient_dim(), need = n - s.dim();
    for (;;) {
      std::vector<Vec> extra;
      for (std::size_t i = 0; i < need; ++i) extra.push_back(vec(n, 2));
      Subspace c = Subspace::span(n, extra);
      if (c.dim() == need && intersect(c, s).dim() == 0) return c;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dirac::testing

#endif
