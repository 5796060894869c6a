#pragma once

#include <cstddef>
#include <vector>

#include "para/scalar.hpp"

namespace para {

/// Dense matrix over the exact rationals. Dimensions in this library are
/// tiny (at most a few dozen rows), so a straightforward Gauss–Jordan
/// implementation is entirely adequate — what matters is exactness.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator*(const Scalar& c) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& rhs) const = default;

  bool zero() const;

  /// Reduced row echelon form (in place); returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  Scalar det() const;

  /// Inverse; throws std::domain_error when singular.
  QMatrix inverse() const;

  /// One solution x of A x = b; throws std::domain_error when inconsistent.
  /// Free variables are set to zero.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

  /// Basis of the right nullspace, one column vector per basis element.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace para
