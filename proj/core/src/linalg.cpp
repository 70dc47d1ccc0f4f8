#include "chernlab/linalg.hpp"

#include <algorithm>

#include "chernlab/errors.hpp"

namespace chernlab {

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](Coeff c) { return c == 0; });
}

Matrix multiply(const RingContext& field, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw DomainError("matrix shapes do not compose");
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Coeff aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = field.add(out.at(i, j), field.mul(aik, b.at(k, j)));
    }
  return out;
}

Vec apply(const RingContext& field, const Matrix& a, const Vec& v) {
  if (static_cast<int>(v.size()) != a.cols) throw DomainError("vector length mismatch");
  Vec out(static_cast<std::size_t>(a.rows), 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      out[static_cast<std::size_t>(i)] =
          field.add(out[static_cast<std::size_t>(i)], field.mul(a.at(i, j), v[static_cast<std::size_t>(j)]));
  return out;
}

namespace {

// v -= c * row
void axpy(const RingContext& field, Vec& v, Coeff c, const Vec& row) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (row[k] != 0) v[k] = field.sub(v[k], field.mul(c, row[k]));
}

}  // namespace

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Coeff c = v[static_cast<std::size_t>(pivots_[r])];
    if (c != 0) axpy(*field_, v, c, rows_[r]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool Subspace::insert(Vec v) {
  if (static_cast<int>(v.size()) != dim_) throw DomainError("vector length mismatch");
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  if (it == v.end()) return false;
  const int pivot = static_cast<int>(it - v.begin());
  const Coeff inv = field_->inv(*it);
  for (auto& c : v) c = field_->mul(c, inv);
  // Keep the echelon form fully reduced.
  for (auto& row : rows_) {
    const Coeff c = row[static_cast<std::size_t>(pivot)];
    if (c != 0) axpy(*field_, row, c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::vector<int> Subspace::free_coordinates() const {
  std::vector<int> out;
  std::size_t p = 0;
  for (int j = 0; j < dim_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

int rank(const RingContext& field, const Matrix& m) {
  Subspace s(field, m.cols);
  for (int i = 0; i < m.rows; ++i)
    s.insert(Vec(m.data.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                 m.data.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols));
  return s.rank();
}

}  // namespace chernlab
