#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/hilbert_series.hpp"
#include "chernlab/ideal.hpp"
#include "chernlab/linalg.hpp"

namespace chernlab {

// Graded vector-space model of L = (S/I_1 + ... + S/I_g) / (S / I_1 ∩ ... ∩ I_g).
//
// In degree s the ambient space N_s is the direct sum of the degree-s parts of
// the S/I_i, with coordinates indexed by (component, standard monomial). The
// diagonal image of (S/∩I_i)_s is kept in reduced echelon form; the non-pivot
// coordinates of N_s form the chosen basis of L_s.
class TorsionModuleModel {
 public:
  struct Coordinate {
    int component;
    Monomial monomial;
  };

  const Ring& ring() const { return ring_; }
  int num_components() const { return static_cast<int>(bases_.size()); }

  // Largest s with L_s != 0; nullopt when L = 0.
  std::optional<int> top_degree() const { return top_degree_; }
  const BigInt& lambda() const { return lambda_; }
  int dimension(int s) const;
  // HS_L = sum_i HS(S/I_i) - HS(S/∩I_i), a polynomial.
  const HilbertSeries& series() const { return series_; }

  // Basis vector k of L_s as a coordinate of N_s.
  const Coordinate& basis_element(int s, int k) const;

  // Multiplication by variable v, L_s -> L_{s+1}.
  const Matrix& multiplication(int v, int s) const;
  // Multiplication by a homogeneous polynomial of degree e, L_s -> L_{s+e},
  // composed from the variable matrices.
  Matrix action(const Polynomial& f, int s) const;

  // Coordinates in L_s of the class of the tuple (f_1, ..., f_g), each f_i
  // homogeneous of degree s.
  Vec coset(std::span<const Polynomial> tuple, int s) const;

  // x_u x_v = x_v x_u as maps L_s -> L_{s+2} for all u, v, s.
  bool actions_commute() const;

  friend TorsionModuleModel build_L(std::span<const Ideal> ideals, const Ideal& core);

 private:
  struct Piece {
    std::vector<Coordinate> coordinates;  // of N_s
    std::vector<int> component_offset;
    std::vector<std::vector<Monomial>> standard;  // per component
    std::optional<Subspace> image;
    std::vector<int> basis;  // free coordinates
  };

  explicit TorsionModuleModel(Ring ring) : ring_(std::move(ring)) {}
  Vec ambient_vector(std::span<const Polynomial> tuple, int s) const;
  Vec project(const Vec& ambient, int s) const;

  Ring ring_;
  std::vector<GroebnerBasis> bases_;
  std::optional<int> top_degree_;
  BigInt lambda_ = 0;
  HilbertSeries series_;
  std::vector<Piece> pieces_;                  // degrees 0..top
  std::vector<std::vector<Matrix>> mult_;      // [v][s]
};

// Throws NotFiniteLength when HS_L is not a polynomial, i.e. some I_i + I_j
// is not primary to the maximal ideal.
TorsionModuleModel build_L(std::span<const Ideal> ideals, const Ideal& core);
TorsionModuleModel build_L(std::span<const Ideal> ideals);

BigInt lambda_L(const TorsionModuleModel& model);

// Whether every generator of J acts as zero on L.
bool annihilates(const Ideal& parameters, const TorsionModuleModel& model);

// lambda(L / J^n L).
BigInt jn_colength(const TorsionModuleModel& model, const Ideal& parameters, int n);

}  // namespace chernlab
