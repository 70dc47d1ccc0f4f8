#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chernlab/monomial.hpp"

namespace chernlab {

// Elements of F_p, stored as canonical representatives in [0, p).
using Coeff = std::uint32_t;

enum class OrderKind { Grevlex, Lex, Elimination };

// Elimination(k): compare the total degree in the first k variables first,
// then fall back to grevlex on all variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int eliminated = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(int k) { return {OrderKind::Elimination, k}; }

  bool degree_compatible() const { return kind == OrderKind::Grevlex; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  std::string name() const;
};

bool is_prime(std::uint64_t n);

// The ambient polynomial ring F_p[x_1..x_r] together with its term order.
class RingContext {
 public:
  static constexpr Coeff kDefaultCharacteristic = 32003;

  RingContext(std::vector<std::string> variables,
              Coeff characteristic = kDefaultCharacteristic,
              MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return variables_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  Coeff characteristic() const { return p_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<int> variable_index(std::string_view name) const;

  // Three-way comparison under the ring's order: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  }
  Coeff inv(Coeff a) const;
  // Maps any signed integer into [0, p).
  Coeff from_int(std::int64_t v) const;
  // Representative in (-p/2, p/2].
  std::int64_t symmetric(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  // Same variables and characteristic, different order.
  std::shared_ptr<const RingContext> with_order(MonomialOrder order) const;
  // Same variables, different characteristic.
  std::shared_ptr<const RingContext> with_characteristic(Coeff p) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.p_ == b.p_ && a.order_ == b.order_ && a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
  Coeff p_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingContext>;

inline Ring make_ring(std::vector<std::string> variables,
                      Coeff characteristic = RingContext::kDefaultCharacteristic,
                      MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const RingContext>(std::move(variables), characteristic, order);
}

// Pointer identity or value equality.
inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace chernlab
