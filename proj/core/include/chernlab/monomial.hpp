#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace chernlab {

// Upper bound on the number of ring variables, including the auxiliary
// variable adjoined for intersections.
inline constexpr int kMaxVariables = 16;

// Exponent vector. Slots at or beyond the ring's variable count stay zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e) {
    degree_ += static_cast<std::uint32_t>(e) - exps_[static_cast<std::size_t>(i)];
    exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
  }

  int degree() const { return static_cast<int>(degree_); }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // True when no variable occurs in both.
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  // Support as a bitmask over variable indices.
  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) mask |= 1u << i;
    return mask;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      m.exps_[i] = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      m.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      m.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      m.exps_[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (auto e : exps_) h = h * 1000003u ^ e;
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace chernlab
