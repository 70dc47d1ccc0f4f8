#pragma once

#include <span>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/graded_module.hpp"
#include "chernlab/ideal.hpp"
#include "chernlab/polynomial.hpp"

namespace chernlab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Data of the Eagon-Northcott resolution of S/J^n for J = (a_1, ..., a_d)
// generated by a regular sequence.
struct ENResolutionData {
  int n = 0;
  int d = 0;
  // n x (n + d - 1): row i carries a_1..a_d starting at column i.
  PolyMatrix matrix;
  std::vector<BigInt> betti;  // beta_0 = 1, beta_1, ..., beta_d
};

ENResolutionData en_matrix(std::span<const Polynomial> parameters, int n);

// beta_i(S/J^n) = C(n+d-1, d-i) C(n+i-2, i-1), 1 <= i <= d.
BigInt en_betti(int n, int d, int i);
std::vector<BigInt> en_betti_vector(int n, int d);

// Generators of J^n read off from the matrix: its maximal minors for d >= 2,
// and a_1^n for d = 1.
std::vector<Polynomial> en_power_generators(const ENResolutionData& data);

Polynomial determinant(const PolyMatrix& square);
std::vector<Polynomial> maximal_minors(const PolyMatrix& matrix);

// C(n+d-1, d-1) * lambda(L); valid when J annihilates L.
BigInt tor1_closed_form(int n, int d, const BigInt& lambda);

// lambda(Tor_1(L, S/J^n)) as the alternating sum of lengths
//   lambda(R/K^n) - sum_i lambda(S/(I_i + J^n)) + lambda(L/J^n L).
BigInt tor1_via_lengths(std::span<const Ideal> ideals, const Ideal& core, const Ideal& parameters,
                        const TorsionModuleModel& model, int n);
BigInt tor1_via_lengths(std::span<const Ideal> ideals, const Ideal& parameters,
                        const TorsionModuleModel& model, int n);

// Koszul complex of a_1..a_d. differentials[k-1] is the matrix of
// d_k : S^{C(d,k)} -> S^{C(d,k-1)}, with rows and columns indexed by
// lexicographically ordered index subsets.
struct KoszulData {
  int d = 0;
  std::vector<BigInt> ranks;  // C(d,0) .. C(d,d)
  std::vector<PolyMatrix> differentials;
};

KoszulData koszul_complex(std::span<const Polynomial> parameters);

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
bool is_zero(const PolyMatrix& m);

}  // namespace chernlab
