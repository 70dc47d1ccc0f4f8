#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/hilbert_series.hpp"
#include "chernlab/polynomial.hpp"

namespace chernlab {

// Homogeneous ideal of a polynomial ring. The reduced Groebner basis is
// computed on first use and shared between copies.
class Ideal {
 public:
  // Throws NotHomogeneous if any generator is not homogeneous.
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal unit(const Ring& ring);
  static Ideal zero(const Ring& ring);
  // The ideal generated by all variables.
  static Ideal maximal(const Ring& ring);

  const Ring& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return generators_; }

  const GroebnerBasis& groebner_basis() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner_basis().is_unit(); }
  // Equal as ideals (same reduced Groebner basis).
  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(std::span<const Ideal> ideals);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// All n-fold products of generators. Requires n >= 1.
Ideal ideal_power(const Ideal& a, int n);
// Elimination of t from t*A + (1-t)*B in a ring with one extra variable.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(std::span<const Ideal> ideals);

// dim S/A; -1 for the unit ideal.
int krull_dimension(const Ideal& a);
HilbertSeries hilbert_series(const Ideal& a);
// dim_k S/A. Throws NotFiniteLength when dim S/A > 0.
BigInt length_quotient(const Ideal& a);
bool is_mprimary(const Ideal& a);

// Dimension of the quotient of a monomial ideal with these generators:
// largest set of variables supporting no generator.
int monomial_dimension(std::span<const Monomial> leading, int num_variables);

}  // namespace chernlab
