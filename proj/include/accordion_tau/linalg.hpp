#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

// Exact linear algebra over Q, sized for the small dense systems that come
// out of path-algebra computations.
namespace accordion_tau::linalg {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n);
  Matrix operator*(const Matrix& rhs) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
};

// Incrementally maintained reduced row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Adds v to the span; returns true iff v was not already in it.
  bool add(Vector v);
  bool contains(Vector v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(Vector& v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<Vector>& rows, std::size_t dim);

// Basis of { x : a x = 0 }.
std::vector<Vector> nullspace(const Matrix& a);

}  // namespace accordion_tau::linalg
