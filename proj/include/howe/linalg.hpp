#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

/**
 * Dense matrix over the Gaussian rationals, used for the exact kernel,
 * rank and solve steps (weight blocks, injectivity checks, calibration
 * systems).  Everything is fraction-free only in spirit: entries stay
 * reduced fractions and elimination is plain Gauss-Jordan.
 */
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const GaussianRational& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /** In-place reduced row echelon form; returns the pivot column list. */
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /** Basis of the right nullspace, one column vector per entry. */
  std::vector<std::vector<GaussianRational>> nullspace() const;

  /** Unique solution of A x = b if it exists and is unique. */
  std::optional<std::vector<GaussianRational>> solve(
      const std::vector<GaussianRational>& b) const;

  /** Inverse of a square nonsingular matrix; std::nullopt when singular. */
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> data_;
};

}  // namespace howe
