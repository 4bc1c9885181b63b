#ifndef QFV_LINALG_HPP
#define QFV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qfv/numeric.hpp"

namespace qfv {

// Dense matrix of exact rationals, row major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Dense matrix of exact integers, row major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination: rows are
// scaled to integers by their denominator lcm, then eliminated with exact
// divisions only. No floating point, no intermediate fractions.
std::size_t rank_fraction_free(const RatMatrix& m);
std::size_t rank_fraction_free(const IntMatrix& m);

// Rank by plain Gauss elimination over mpq. Independent of the Bareiss path;
// used to cross-check it in tests.
std::size_t rank_gauss(const RatMatrix& m);

// Reduced row echelon form over the rationals (in place copy returned),
// together with the list of pivot columns in increasing order.
struct Rref {
  RatMatrix mat;
  std::vector<std::size_t> pivot_cols;
};
Rref rref(const RatMatrix& m);

}  // namespace qfv

#endif  // QFV_LINALG_HPP
