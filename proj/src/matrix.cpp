#include "para/matrix.hpp"

#include <stdexcept>

namespace para {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix::operator*: shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!is_zero(rhs.at(k, j))) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

QMatrix QMatrix::operator*(const Scalar& c) const {
  QMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("QMatrix::operator+: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("QMatrix::operator-: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool QMatrix::zero() const {
  for (const Scalar& x : data_)
    if (!para::is_zero(x)) return false;
  return true;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && para::is_zero(at(piv, col))) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
    Scalar inv = Scalar(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || para::is_zero(at(r, col))) continue;
      Scalar f = at(r, col);
      for (std::size_t j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix tmp = *this;
  return tmp.rref().size();
}

Scalar QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::det: not square");
  QMatrix tmp = *this;
  Scalar d = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t piv = col;
    while (piv < rows_ && para::is_zero(tmp.at(piv, col))) ++piv;
    if (piv == rows_) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(tmp.at(piv, j), tmp.at(col, j));
      d = -d;
    }
    d *= tmp.at(col, col);
    Scalar inv = Scalar(1) / tmp.at(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (para::is_zero(tmp.at(r, col))) continue;
      Scalar f = tmp.at(r, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) tmp.at(r, j) -= f * tmp.at(col, j);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::inverse: not square");
  QMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw std::domain_error("QMatrix::inverse: singular matrix");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

std::vector<Scalar> QMatrix::solve(const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("QMatrix::solve: rhs size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_)
    throw std::domain_error("QMatrix::solve: inconsistent system");
  std::vector<Scalar> x(cols_, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::vector<std::vector<Scalar>> QMatrix::nullspace() const {
  QMatrix tmp = *this;
  auto pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace para
