#include "chernlab/polynomial.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "chernlab/errors.hpp"

namespace chernlab {

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw ContextMismatch();
}

std::vector<Term> canonicalize(const RingContext& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = t.coeff % ring.characteristic();
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = ring.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.monomial, c});
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  terms_ = canonicalize(*ring_, std::move(terms));
}

Polynomial Polynomial::constant(Ring ring, Coeff c) {
  return Polynomial(std::move(ring), {Term{Monomial{}, c}});
}

Polynomial Polynomial::variable(Ring ring, int index) {
  if (index < 0 || index >= ring->num_variables())
    throw DomainError("variable index out of range");
  return Polynomial(std::move(ring), {Term{Monomial::variable(index), 1}});
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Coeff c) {
  return Polynomial(std::move(ring), {Term{m, c}});
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& x) {
    return ring_->compare(t.monomial, x) > 0;
  });
  return it != terms_.end() && it->monomial == m ? it->coeff : 0;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || leading_coeff() == 1) return *this;
  return scaled(ring_->inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coeff = ring_->mul(t.coeff, c);
  return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, ring_->mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::reordered(const Ring& target) const {
  if (target->variables() != ring_->variables() ||
      target->characteristic() != ring_->characteristic())
    throw ContextMismatch();
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = ring_->symmetric(t.coeff);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->num_variables(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

// Merge of two sorted term lists: f + c * m * g.
Polynomial merge_add(const Polynomial& f, Coeff c, const Monomial& m, const Polynomial& g,
                     const Ring& ring) {
  const RingContext& R = *ring;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto ft = f.terms();
  auto gt = g.terms();
  std::size_t i = 0, j = 0;
  while (i < ft.size() && j < gt.size()) {
    Monomial gm = gt[j].monomial * m;
    int cmp = R.compare(ft[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(ft[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, R.mul(gt[j++].coeff, c)});
    } else {
      Coeff s = R.add(ft[i].coeff, R.mul(gt[j].coeff, c));
      if (s != 0) out.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  for (; i < ft.size(); ++i) out.push_back(ft[i]);
  for (; j < gt.size(); ++j) out.push_back({gt[j].monomial * m, R.mul(gt[j].coeff, c)});
  return Polynomial::from_sorted(ring, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  return merge_add(f, 1, Monomial{}, g, f.ring());
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  return merge_add(f, f.ring()->neg(1), Monomial{}, g, f.ring());
}

Polynomial operator-(const Polynomial& f) { return f.scaled(f.ring()->neg(1)); }

Polynomial sub_mul(const Polynomial& f, Coeff c, const Monomial& m, const Polynomial& g) {
  require_same_ring(f, g);
  c %= f.ring()->characteristic();
  if (c == 0) return f;
  return merge_add(f, f.ring()->neg(c), m, g, f.ring());
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (f.size() == 1) return g.mul_term(f.leading_monomial(), f.leading_coeff());
  if (g.size() == 1) return f.mul_term(g.leading_monomial(), g.leading_coeff());
  const RingContext& R = *f.ring();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, 0);
      it->second = R.add(it->second, R.mul(a.coeff, b.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return Polynomial(f.ring(), std::move(out));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) return false;
  return f.terms_ == g.terms_;
}

Polynomial pow(const Polynomial& f, int n) {
  if (n < 0) throw DomainError("negative exponent");
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const Ring& ring = f.ring();
  if (images.size() != static_cast<std::size_t>(ring->num_variables()))
    throw DomainError("substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_ring(img.ring(), ring)) throw ContextMismatch();
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(ring);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff);
    for (int v = 0; v < ring->num_variables(); ++v)
      if (t.monomial[v] > 0) prod = prod * power_of(static_cast<std::size_t>(v), t.monomial[v]);
    result = result + prod;
  }
  return result;
}

Polynomial embed(const Polynomial& f, const Ring& target, int offset) {
  const int r = f.ring()->num_variables();
  if (offset < 0 || r + offset > target->num_variables() ||
      target->characteristic() != f.ring()->characteristic())
    throw ContextMismatch();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < r; ++i) m.set(i + offset, t.monomial[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace chernlab
