#include "qfv/linalg.hpp"

#include <algorithm>

#include "qfv/errors.hpp"

namespace qfv {

namespace {

// Clears denominators row by row; row scaling does not change the rank.
IntMatrix to_integer_rows(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m.at(i, j) * Rat(l);
      out.at(i, j) = scaled.get_num();  // denominator is 1 after scaling
    }
  }
  return out;
}

}  // namespace

// Bareiss elimination: after step k every entry is divisible by the previous
// pivot, so M(i,j) <- (M(i,j) * pivot - M(i,k) * M(k,j)) / prev stays
// integral and fraction free.
std::size_t rank_fraction_free(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Int prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < rows && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m.at(pivot_row, j), m.at(row, j));
    const Int pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < rows; ++i) {
      const Int factor = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        Int t = m.at(i, j) * pivot - factor * m.at(row, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    ++row;
    ++rank;
  }
  return rank;
}

std::size_t rank_fraction_free(const RatMatrix& m) {
  return rank_fraction_free(to_integer_rows(m));
}

std::size_t rank_gauss(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < rows && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m.at(pivot_row, j), m.at(row, j));
    const Rat pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rat factor = m.at(i, col) / pivot;
      for (std::size_t j = col; j < cols; ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rref rref(const RatMatrix& input) {
  Rref result{input, {}};
  RatMatrix& m = result.mat;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < rows && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m.at(pivot_row, j), m.at(row, j));
    const Rat pivot = m.at(row, col);
    for (std::size_t j = col; j < cols; ++j) m.at(row, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rat factor = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  return result;
}

}  // namespace qfv
