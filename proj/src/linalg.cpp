#include "howe/linalg.hpp"

#include <stdexcept>

namespace howe {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GaussianRational& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const GaussianRational& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pivot, c));
    GaussianRational inv = at(row, col).inv();
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      GaussianRational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<GaussianRational>> Matrix::nullspace() const {
  Matrix copy = *this;
  std::vector<std::size_t> pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<GaussianRational> v(cols_);
    v[free_col] = GaussianRational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -copy.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussianRational>> Matrix::solve(
    const std::vector<GaussianRational>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("Matrix: rhs size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots = aug.rref();
  // Inconsistent if the augmented column became a pivot; underdetermined if
  // some variable column did not.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  if (pivots.size() != cols_) return std::nullopt;
  std::vector<GaussianRational> x(cols_);
  for (std::size_t k = 0; k < cols_; ++k) x[k] = aug.at(k, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = GaussianRational(1);
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t k = 0; k < rows_; ++k)
    if (pivots[k] != k) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

}  // namespace howe
