#include "chernlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>
#include <utility>

#include "chernlab/errors.hpp"

namespace chernlab {

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Elimination:
      return "elimination(" + std::to_string(eliminated) + ")";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variables, Coeff characteristic,
                         MonomialOrder order)
    : variables_(std::move(variables)), p_(characteristic), order_(order) {
  if (variables_.empty()) throw DomainError("a ring needs at least one variable");
  if (variables_.size() > static_cast<std::size_t>(kMaxVariables))
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (!is_prime(p_) || p_ >= (1u << 31))
    throw DomainError("characteristic must be a prime below 2^31, got " + std::to_string(p_));
  if (order_.kind == OrderKind::Elimination &&
      (order_.eliminated < 1 || order_.eliminated >= num_variables()))
    throw DomainError("elimination order must eliminate between 1 and r-1 variables");
}

std::optional<int> RingContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, int r) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Smaller exponent in the last differing variable wins.
  for (int i = r - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int RingContext::compare(const Monomial& a, const Monomial& b) const {
  const int r = num_variables();
  switch (order_.kind) {
    case OrderKind::Grevlex:
      return grevlex_compare(a, b, r);
    case OrderKind::Lex:
      for (int i = 0; i < r; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::Elimination: {
      int da = 0, db = 0;
      for (int i = 0; i < order_.eliminated; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      return grevlex_compare(a, b, r);
    }
  }
  return 0;
}

Coeff RingContext::inv(Coeff a) const {
  if (a == 0) throw DomainError("division by zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return from_int(t);
}

Coeff RingContext::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

std::shared_ptr<const RingContext> RingContext::with_order(MonomialOrder order) const {
  return std::make_shared<const RingContext>(variables_, p_, order);
}

std::shared_ptr<const RingContext> RingContext::with_characteristic(Coeff p) const {
  return std::make_shared<const RingContext>(variables_, p, order_);
}

}  // namespace chernlab
