#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "odolab/rational.hpp"

namespace odolab {

/// Dense row-major matrix, just enough for exact rank computations.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Rank over Q by Gauss-Jordan elimination; exact.
inline std::size_t exact_rank(Matrix<Rational> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

/// dim ker of the map Q^cols -> Q^rows.
inline std::size_t kernel_dimension(const Matrix<Rational>& a) { return a.cols() - exact_rank(a); }

}  // namespace odolab
