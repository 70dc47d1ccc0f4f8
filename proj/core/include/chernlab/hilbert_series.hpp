#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/monomial.hpp"
#include "chernlab/ring.hpp"

namespace chernlab {

// numerator(t) / (1 - t)^denominator_exponent, kept in lowest terms.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  // Reduces on construction.
  HilbertSeries(std::vector<BigInt> numerator, int denominator_exponent);

  const std::vector<BigInt>& numerator() const { return numerator_; }
  int denominator_exponent() const { return denominator_exponent_; }

  bool is_zero() const { return numerator_.empty(); }
  bool is_polynomial() const { return denominator_exponent_ == 0; }
  // Degree of the numerator; nullopt for the zero series.
  std::optional<int> numerator_degree() const;

  // Coefficient of t^s in the power-series expansion.
  BigInt coefficient(int s) const;
  BigInt numerator_at_one() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<BigInt> numerator_;
  int denominator_exponent_ = 0;
};

// Series of S/(m_1, ..., m_k) with S having `num_variables` variables, by
// pivot recursion HS(I) = HS(I + m) + t^deg(m) HS(I : m). The generators need
// not be minimal.
HilbertSeries hilbert_series_monomial(std::span<const Monomial> generators, int num_variables);

inline HilbertSeries hilbert_series_monomial(std::span<const Monomial> generators,
                                             const RingContext& ring) {
  return hilbert_series_monomial(generators, ring.num_variables());
}

// Unreduced numerator over (1 - t)^num_variables.
std::vector<BigInt> hilbert_numerator(std::span<const Monomial> generators, int num_variables);

std::vector<Monomial> minimalize(std::span<const Monomial> generators);

}  // namespace chernlab
