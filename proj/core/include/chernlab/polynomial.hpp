#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chernlab/monomial.hpp"
#include "chernlab/ring.hpp"

namespace chernlab {

struct Term {
  Monomial monomial;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over F_p. Terms are kept sorted by strictly decreasing
// monomial under the ring's order and never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  // Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  Polynomial(Ring ring, std::vector<Term> terms);

  // Caller guarantees the terms are already canonical.
  static Polynomial from_sorted(Ring ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms), Sorted{});
  }
  static Polynomial constant(Ring ring, Coeff c);
  static Polynomial variable(Ring ring, int index);
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Undefined on the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  // Total degree; nullopt encodes the degree of zero.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Coeff coefficient(const Monomial& m) const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;

  // Same polynomial expressed in a ring with the same variables and
  // characteristic but a different term order.
  Polynomial reordered(const Ring& target) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  // f - c * m * g as a single merge.
  friend Polynomial sub_mul(const Polynomial& f, Coeff c, const Monomial& m,
                            const Polynomial& g);

 private:
  struct Sorted {};
  Polynomial(Ring ring, std::vector<Term> terms, Sorted)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, int n);

// Image of f under the linear substitution x_j -> sum_k images[j] (images
// are polynomials in the same ring, typically linear forms).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

// Moves f into `target`, sending variable i of f's ring to variable
// i + offset of `target`.
Polynomial embed(const Polynomial& f, const Ring& target, int offset);

}  // namespace chernlab
