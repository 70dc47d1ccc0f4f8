#pragma once

#include <vector>

#include "chernlab/ring.hpp"

namespace chernlab {

using Vec = std::vector<Coeff>;

// Dense row-major matrix over F_p.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coeff> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Coeff& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  Coeff at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  bool is_zero() const;
};

Matrix multiply(const RingContext& field, const Matrix& a, const Matrix& b);
Vec apply(const RingContext& field, const Matrix& a, const Vec& v);

// Subspace of F_p^n kept in reduced row echelon form. The pivot of each row
// is its first nonzero coordinate.
class Subspace {
 public:
  Subspace(const RingContext& field, int ambient_dim) : field_(&field), dim_(ambient_dim) {}

  // Adds v to the span; returns whether the rank grew.
  bool insert(Vec v);
  // Representative of v modulo the subspace with zeros at every pivot.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  // Coordinates that are not pivots, ascending. They index a basis of the
  // quotient F_p^n / span.
  std::vector<int> free_coordinates() const;

 private:
  const RingContext* field_;
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

int rank(const RingContext& field, const Matrix& m);

}  // namespace chernlab
