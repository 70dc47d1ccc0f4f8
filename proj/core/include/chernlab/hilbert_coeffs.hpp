#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/errors.hpp"
#include "chernlab/ideal.hpp"

namespace chernlab {

// Values of a Hilbert-Samuel type function together with the polynomial
//   P(n) = sum_{i=0}^{d} (-1)^i e_i C(n + d - 1 - i, d - i)
// fitted to its tail.
struct HilbertDataset {
  int d = 0;
  std::map<int, BigInt> values;
  std::vector<BigInt> coefficients;  // e_0 .. e_d
  int stabilization_index = 0;       // smallest n0 with P(n) = values[n] for all n >= n0

  BigInt polynomial_at(int n) const;
};

// P(n) for the given coefficient vector (its size is d + 1).
BigInt hilbert_polynomial_value(std::span<const BigInt> coefficients, int n);

class FitError : public Error {
 public:
  enum class Kind { Unstable, Inconsistent };
  FitError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Exact solve of the (d+1)x(d+1) system on the window n = first..first+d.
// Throws FitError(Inconsistent) when the solution is not integral.
std::vector<BigInt> solve_window(const std::map<int, BigInt>& values, int first, int d);

// Slides windows of width d+1 from the top of the data downward until two
// consecutive windows agree. Values must cover a contiguous range of n.
HilbertDataset fit_coefficients(const std::map<int, BigInt>& values, int d);

// lambda(S / (core + J^n)), i.e. lambda(R / K^n) for R = S/core, K = J R.
BigInt hilbert_samuel(const Ideal& core, const Ideal& parameters, int n);

struct CmVerdict {
  bool cohen_macaulay;
  BigInt e0;
  BigInt colength;  // lambda(R/K)
};

CmVerdict cm_test(const BigInt& e0, const BigInt& colength);

enum class ChernSign { Negative, Zero, Positive };

ChernSign chern_sign(const BigInt& e1);
std::string to_string(ChernSign sign);

}  // namespace chernlab
