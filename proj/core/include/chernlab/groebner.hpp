#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chernlab/polynomial.hpp"

namespace chernlab {

struct GroebnerOptions {
  // Homogeneous input only: ignore S-pairs whose lcm has larger degree. The
  // result is then a Groebner basis up to that degree.
  std::optional<int> degree_bound;
};

// Reduced Groebner basis: monic elements, sorted by increasing leading
// monomial, no leading monomial dividing any term of another element.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements, bool truncated = false);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  std::span<const Polynomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<Monomial> leading_monomials() const;

  bool is_unit() const { return !elements_.empty() && elements_.front().leading_monomial().is_one(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  // True when computed under a degree bound.
  bool truncated() const { return truncated_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
  bool truncated_;
};

// Deterministic for a fixed input. Pairs are selected by smallest lcm
// (degree first for homogeneous input), ties broken by pair creation order.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const Ring& ring,
                         const GroebnerOptions& options = {});

// Full remainder of f under multivariate division.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> monic_divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Monomials outside the initial ideal, grouped by degree 0..max_degree and
// sorted decreasingly under the ring's order.
std::vector<std::vector<Monomial>> standard_monomials_up_to(const GroebnerBasis& basis,
                                                            int max_degree);

// All monomials of the given degree in the first num_vars variables,
// decreasing under `ring`'s order.
std::vector<Monomial> monomials_of_degree(const RingContext& ring, int degree);

}  // namespace chernlab
