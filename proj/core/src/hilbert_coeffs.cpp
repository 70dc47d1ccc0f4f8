#include "chernlab/hilbert_coeffs.hpp"

namespace chernlab {

BigInt hilbert_polynomial_value(std::span<const BigInt> coefficients, int n) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  BigInt sum = 0;
  for (int i = 0; i <= d; ++i) {
    BigInt term = coefficients[static_cast<std::size_t>(i)] * binomial(n + d - 1 - i, d - i);
    if (i % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

BigInt HilbertDataset::polynomial_at(int n) const { return hilbert_polynomial_value(coefficients, n); }

std::vector<BigInt> solve_window(const std::map<int, BigInt>& values, int first, int d) {
  const int size = d + 1;
  // Augmented matrix A | b with A[k][i] = (-1)^i C(n_k + d - 1 - i, d - i).
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(size),
                                     std::vector<BigInt>(static_cast<std::size_t>(size) + 1));
  for (int k = 0; k < size; ++k) {
    const int n = first + k;
    auto it = values.find(n);
    if (it == values.end()) throw FitError(FitError::Kind::Unstable, "missing value at n=" + std::to_string(n));
    auto& row = m[static_cast<std::size_t>(k)];
    for (int i = 0; i <= d; ++i) {
      BigInt b = binomial(n + d - 1 - i, d - i);
      row[static_cast<std::size_t>(i)] = i % 2 ? BigInt(-b) : b;
    }
    row[static_cast<std::size_t>(size)] = it->second;
  }

  // Bareiss fraction-free forward elimination.
  BigInt prev = 1;
  for (int k = 0; k < size; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (m[ku][ku] == 0) {
      std::size_t swap = ku + 1;
      while (swap < m.size() && m[swap][ku] == 0) ++swap;
      if (swap == m.size()) throw FitError(FitError::Kind::Inconsistent, "singular binomial system");
      std::swap(m[ku], m[swap]);
    }
    for (std::size_t i = ku + 1; i < m.size(); ++i) {
      for (std::size_t j = ku + 1; j < m[i].size(); ++j) {
        BigInt num = m[i][j] * m[ku][ku] - m[i][ku] * m[ku][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][ku] = 0;
    }
    prev = m[ku][ku];
  }

  // Back substitution over the rationals; integrality is required.
  std::vector<Rational> x(static_cast<std::size_t>(size));
  for (int k = size - 1; k >= 0; --k) {
    const auto ku = static_cast<std::size_t>(k);
    Rational acc(m[ku][static_cast<std::size_t>(size)]);
    for (std::size_t j = ku + 1; j < static_cast<std::size_t>(size); ++j) acc -= Rational(m[ku][j]) * x[j];
    x[ku] = acc / Rational(m[ku][ku]);
    x[ku].canonicalize();
  }
  std::vector<BigInt> out;
  out.reserve(x.size());
  for (const auto& q : x) {
    if (q.get_den() != 1)
      throw FitError(FitError::Kind::Inconsistent, "inconsistent data: non-integral Hilbert coefficient");
    out.push_back(q.get_num());
  }
  return out;
}

HilbertDataset fit_coefficients(const std::map<int, BigInt>& values, int d) {
  if (d < 0) throw DomainError("dimension must be nonnegative");
  if (values.empty()) throw FitError(FitError::Kind::Unstable, "no values to fit");
  const int lo = values.begin()->first;
  const int hi = values.rbegin()->first;
  if (hi - lo + 1 != static_cast<int>(values.size()))
    throw DomainError("values must cover a contiguous range of n");
  if (static_cast<int>(values.size()) < d + 1)
    throw FitError(FitError::Kind::Unstable, "window too short - increase max_power");

  HilbertDataset out;
  out.d = d;
  out.values = values;

  std::vector<BigInt> previous = solve_window(values, hi - d, d);
  bool stable = false;
  for (int first = hi - d - 1; first >= lo; --first) {
    std::vector<BigInt> current = solve_window(values, first, d);
    if (current == previous) {
      stable = true;
      break;
    }
    previous = std::move(current);
  }
  if (!stable) throw FitError(FitError::Kind::Unstable, "window too short - increase max_power");
  out.coefficients = std::move(previous);

  int n0 = hi + 1;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (out.polynomial_at(it->first) != it->second) break;
    n0 = it->first;
  }
  if (n0 > hi - d - 1)
    throw FitError(FitError::Kind::Inconsistent, "inconsistent data: fitted polynomial misses the top values");
  out.stabilization_index = n0;
  return out;
}

BigInt hilbert_samuel(const Ideal& core, const Ideal& parameters, int n) {
  if (n < 1) throw DomainError("Hilbert-Samuel function needs n >= 1");
  return length_quotient(ideal_sum(core, ideal_power(parameters, n)));
}

CmVerdict cm_test(const BigInt& e0, const BigInt& colength) {
  return CmVerdict{e0 == colength, e0, colength};
}

ChernSign chern_sign(const BigInt& e1) {
  const int s = sgn(e1);
  return s < 0 ? ChernSign::Negative : s == 0 ? ChernSign::Zero : ChernSign::Positive;
}

std::string to_string(ChernSign sign) {
  switch (sign) {
    case ChernSign::Negative:
      return "negative";
    case ChernSign::Zero:
      return "zero";
    case ChernSign::Positive:
      return "positive";
  }
  return "?";
}

}  // namespace chernlab
