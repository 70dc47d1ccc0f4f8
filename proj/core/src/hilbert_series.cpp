#include "chernlab/hilbert_series.hpp"

#include <algorithm>

#include "chernlab/errors.hpp"

namespace chernlab {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

// p * (1 - t)^k
Poly times_one_minus_t(Poly p, int k) {
  for (int step = 0; step < k; ++step) {
    p.push_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= p[i - 1];
  }
  trim(p);
  return p;
}

// p * t^k
Poly shift(const Poly& p, int k) {
  if (p.empty()) return p;
  Poly out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

BigInt at_one(const Poly& p) {
  BigInt s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// p / (1 - t), requiring p(1) = 0.
Poly divide_one_minus_t(const Poly& p) {
  // Synthetic division by (t - 1), then negate.
  const std::size_t n = p.size();
  Poly q(n - 1);
  BigInt carry = 0;
  for (std::size_t k = n - 1; k >= 1; --k) {
    carry += p[k];
    q[k - 1] = -carry;
  }
  trim(q);
  return q;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<BigInt> numerator, int denominator_exponent)
    : numerator_(std::move(numerator)), denominator_exponent_(denominator_exponent) {
  trim(numerator_);
  if (numerator_.empty()) {
    denominator_exponent_ = 0;
    return;
  }
  while (denominator_exponent_ > 0 && at_one(numerator_) == 0) {
    numerator_ = divide_one_minus_t(numerator_);
    --denominator_exponent_;
  }
}

std::optional<int> HilbertSeries::numerator_degree() const {
  if (numerator_.empty()) return std::nullopt;
  return static_cast<int>(numerator_.size()) - 1;
}

BigInt HilbertSeries::coefficient(int s) const {
  if (s < 0) return 0;
  if (denominator_exponent_ == 0)
    return static_cast<std::size_t>(s) < numerator_.size() ? numerator_[static_cast<std::size_t>(s)]
                                                           : BigInt(0);
  BigInt sum = 0;
  const int e = denominator_exponent_;
  for (std::size_t k = 0; k < numerator_.size() && static_cast<int>(k) <= s; ++k)
    sum += numerator_[k] * binomial(s - static_cast<int>(k) + e - 1, e - 1);
  return sum;
}

BigInt HilbertSeries::numerator_at_one() const { return at_one(numerator_); }

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  const int e = std::max(a.denominator_exponent_, b.denominator_exponent_);
  return HilbertSeries(add(times_one_minus_t(a.numerator_, e - a.denominator_exponent_),
                           times_one_minus_t(b.numerator_, e - b.denominator_exponent_)),
                       e);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  Poly neg = b.numerator_;
  for (auto& c : neg) c = -c;
  HilbertSeries nb;
  nb.numerator_ = std::move(neg);
  nb.denominator_exponent_ = b.denominator_exponent_;
  return a + nb;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  if (numerator_.empty()) num = "0";
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    const BigInt& c = numerator_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      num += mag.get_str();
    } else {
      if (mag != 1) num += mag.get_str() + "*";
      num += "t";
      if (k > 1) num += "^" + std::to_string(k);
    }
  }
  if (denominator_exponent_ == 0) return num;
  return "(" + num + ")/(1-t)^" + std::to_string(denominator_exponent_);
}

std::vector<Monomial> minimalize(std::span<const Monomial> generators) {
  std::vector<Monomial> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : sorted)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); }))
      out.push_back(m);
  return out;
}

namespace {

bool is_pure_power(const Monomial& m) {
  const std::uint32_t s = m.support();
  return s != 0 && (s & (s - 1)) == 0;
}

Poly numerator_rec(std::vector<Monomial> gens, int r) {
  gens = minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  std::vector<int> frequency(static_cast<std::size_t>(r), 0);
  bool mixed = false;
  for (const auto& g : gens) {
    if (is_pure_power(g)) continue;
    mixed = true;
    for (int v = 0; v < r; ++v)
      if (g[v] > 0) ++frequency[static_cast<std::size_t>(v)];
  }
  if (!mixed) {
    // Pure powers in distinct variables form a regular sequence.
    Poly out{1};
    for (const auto& g : gens) {
      Poly factor(static_cast<std::size_t>(g.degree()) + 1, 0);
      factor[0] = 1;
      factor.back() = -1;
      Poly prod(out.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += out[i] * factor[j];
      out = std::move(prod);
    }
    trim(out);
    return out;
  }
  int pivot = 0;
  for (int v = 1; v < r; ++v)
    if (frequency[static_cast<std::size_t>(v)] > frequency[static_cast<std::size_t>(pivot)]) pivot = v;
  int e = 0;
  for (const auto& g : gens)
    if (!is_pure_power(g) && g[pivot] > 0 && (e == 0 || g[pivot] < e)) e = g[pivot];
  const Monomial m = Monomial::variable(pivot, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(m);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, m));
  return add(numerator_rec(std::move(sum), r), shift(numerator_rec(std::move(colon), r), e));
}

}  // namespace

std::vector<BigInt> hilbert_numerator(std::span<const Monomial> generators, int num_variables) {
  if (num_variables < 1 || num_variables > kMaxVariables) throw DomainError("bad variable count");
  return numerator_rec(std::vector<Monomial>(generators.begin(), generators.end()), num_variables);
}

HilbertSeries hilbert_series_monomial(std::span<const Monomial> generators, int num_variables) {
  return HilbertSeries(hilbert_numerator(generators, num_variables), num_variables);
}

}  // namespace chernlab
