#include "accordion_tau/linalg.hpp"

#include <cassert>

namespace accordion_tau::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols == rhs.rows);
  Matrix out(rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  assert(v.size() == cols);
  Vector out(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data)
    if (sgn(x) != 0) return false;
  return true;
}

void EchelonBasis::reduce(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const Vector& row = rows_[r];
    for (std::size_t j = p; j < dim_; ++j)
      if (sgn(row[j]) != 0) v[j] -= factor * row[j];
  }
}

bool EchelonBasis::add(Vector v) {
  assert(v.size() == dim_);
  reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (sgn(v[j]) != 0) {
      pivot = j;
      break;
    }
  if (pivot == dim_) return false;

  const Rational lead = v[pivot];
  for (std::size_t j = pivot; j < dim_; ++j) v[j] /= lead;
  // Keep the basis fully reduced so reduce() is a single pass.
  for (auto& row : rows_) {
    if (sgn(row[pivot]) == 0) continue;
    const Rational factor = row[pivot];
    for (std::size_t j = pivot; j < dim_; ++j)
      if (sgn(v[j]) != 0) row[j] -= factor * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(Vector v) const {
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t dim) {
  EchelonBasis basis(dim);
  for (const auto& r : rows) basis.add(r);
  return basis.rank();
}

std::vector<Vector> nullspace(const Matrix& a) {
  // Reduced row echelon form, then read off one kernel vector per free column.
  Matrix m = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) swap(m(sel, j), m(row, j));
    const Rational lead = m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) /= lead;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t j = col; j < m.cols; ++j) m(r, j) -= factor * m(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, free);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace accordion_tau::linalg
