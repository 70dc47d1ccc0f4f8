#include "chernlab/resolutions.hpp"

#include <algorithm>

#include "chernlab/errors.hpp"

namespace chernlab {

namespace {

const Ring& ring_of(std::span<const Polynomial> parameters) {
  if (parameters.empty()) throw DomainError("need at least one parameter");
  for (const auto& a : parameters)
    if (!same_ring(a.ring(), parameters.front().ring())) throw ContextMismatch();
  return parameters.front().ring();
}

// k-element subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

ENResolutionData en_matrix(std::span<const Polynomial> parameters, int n) {
  if (n < 1) throw DomainError("Eagon-Northcott matrix needs n >= 1");
  const Ring& ring = ring_of(parameters);
  const int d = static_cast<int>(parameters.size());
  ENResolutionData data;
  data.n = n;
  data.d = d;
  data.matrix.assign(static_cast<std::size_t>(n),
                     std::vector<Polynomial>(static_cast<std::size_t>(n + d - 1), Polynomial(ring)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k < d; ++k)
      data.matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
          parameters[static_cast<std::size_t>(k)];
  data.betti = en_betti_vector(n, d);
  return data;
}

BigInt en_betti(int n, int d, int i) {
  if (n < 1 || d < 1) throw DomainError("Betti numbers need n >= 1 and d >= 1");
  if (i < 1 || i > d) throw DomainError("Betti index must lie in 1..d");
  return binomial(n + d - 1, d - i) * binomial(n + i - 2, i - 1);
}

std::vector<BigInt> en_betti_vector(int n, int d) {
  std::vector<BigInt> out{1};
  for (int i = 1; i <= d; ++i) out.push_back(en_betti(n, d, i));
  return out;
}

Polynomial determinant(const PolyMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) throw DomainError("empty determinant");
  const Ring& ring = square.front().front().ring();
  if (n == 1) return square[0][0];
  // Laplace expansion along the first row.
  Polynomial det(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (square[0][col].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(square[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = square[0][col] * determinant(minor);
    det = col % 2 ? det - term : det + term;
  }
  return det;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& matrix) {
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows ? static_cast<int>(matrix.front().size()) : 0;
  if (rows == 0 || cols < rows) throw DomainError("matrix has no maximal minors");
  std::vector<Polynomial> out;
  for (const auto& chosen : subsets(cols, rows)) {
    PolyMatrix square;
    for (const auto& row : matrix) {
      std::vector<Polynomial> r;
      for (int c : chosen) r.push_back(row[static_cast<std::size_t>(c)]);
      square.push_back(std::move(r));
    }
    Polynomial det = determinant(square);
    if (!det.is_zero()) out.push_back(std::move(det));
  }
  return out;
}

std::vector<Polynomial> en_power_generators(const ENResolutionData& data) {
  if (data.d == 1) return {pow(data.matrix[0][0], data.n)};
  return maximal_minors(data.matrix);
}

BigInt tor1_closed_form(int n, int d, const BigInt& lambda) {
  if (n < 1 || d < 1) throw DomainError("Tor length needs n >= 1 and d >= 1");
  return binomial(n + d - 1, d - 1) * lambda;
}

BigInt tor1_via_lengths(std::span<const Ideal> ideals, const Ideal& core, const Ideal& parameters,
                        const TorsionModuleModel& model, int n) {
  if (n < 1) throw DomainError("Tor length needs n >= 1");
  const Ideal power = ideal_power(parameters, n);
  BigInt value = length_quotient(ideal_sum(core, power));
  for (const auto& I : ideals) value -= length_quotient(ideal_sum(I, power));
  value += jn_colength(model, parameters, n);
  return value;
}

BigInt tor1_via_lengths(std::span<const Ideal> ideals, const Ideal& parameters,
                        const TorsionModuleModel& model, int n) {
  return tor1_via_lengths(ideals, ideal_intersect(ideals), parameters, model, n);
}

KoszulData koszul_complex(std::span<const Polynomial> parameters) {
  const Ring& ring = ring_of(parameters);
  const int d = static_cast<int>(parameters.size());
  KoszulData data;
  data.d = d;
  for (int k = 0; k <= d; ++k) data.ranks.push_back(binomial(d, k));
  for (int k = 1; k <= d; ++k) {
    const auto sources = subsets(d, k);
    const auto targets = subsets(d, k - 1);
    PolyMatrix m(targets.size(), std::vector<Polynomial>(sources.size(), Polynomial(ring)));
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const auto& idx = sources[col];
      // d(e_{i_1..i_k}) = sum_j (-1)^{j+1} a_{i_j} e_{.. omit i_j ..}, j 1-based.
      for (std::size_t j = 0; j < idx.size(); ++j) {
        std::vector<int> face = idx;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        const auto row = static_cast<std::size_t>(
            std::find(targets.begin(), targets.end(), face) - targets.begin());
        const Polynomial& a = parameters[static_cast<std::size_t>(idx[j])];
        m[row][col] = j % 2 == 0 ? a : -a;
      }
    }
    data.differentials.push_back(std::move(m));
  }
  return data;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size())
    throw DomainError("matrix shapes do not compose");
  const Ring& ring = a.front().front().ring();
  PolyMatrix out(a.size(), std::vector<Polynomial>(b.front().size(), Polynomial(ring)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j)
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

bool is_zero(const PolyMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); });
  });
}

}  // namespace chernlab
