#include "chernlab/ideal.hpp"

#include <algorithm>
#include <bit>

#include "chernlab/errors.hpp"

namespace chernlab {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (!same_ring(g.ring(), ring_)) throw ContextMismatch();
    if (!g.is_homogeneous()) throw NotHomogeneous("generator '" + g.to_string() + "' is not homogeneous");
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {}); }

Ideal Ideal::maximal(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->num_variables(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = std::make_unique<GroebnerBasis>(buchberger(generators_, ring_));
  });
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw ContextMismatch();
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  return same_ring(a.ring_, b.ring_) && a.groebner_basis() == b.groebner_basis();
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw ContextMismatch();
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("sum of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_sum(acc, ideals[i]);
  return acc;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 1) throw DomainError("ideal power needs n >= 1");
  const auto gens = a.generators();
  const std::size_t k = gens.size();
  // Products over multisets of generator indices, built by degree.
  struct Partial {
    Polynomial value;
    std::size_t last;
  };
  std::vector<Partial> layer;
  for (std::size_t i = 0; i < k; ++i) layer.push_back({gens[i], i});
  for (int step = 1; step < n; ++step) {
    std::vector<Partial> next;
    for (const auto& p : layer)
      for (std::size_t i = p.last; i < k; ++i) next.push_back({p.value * gens[i], i});
    layer = std::move(next);
  }
  std::vector<Polynomial> out;
  out.reserve(layer.size());
  for (auto& p : layer) out.push_back(std::move(p.value));
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  if (ring->num_variables() + 1 > kMaxVariables)
    throw DomainError("intersection needs one spare variable slot");
  std::string aux = "_t";
  while (ring->variable_index(aux)) aux += "_";
  std::vector<std::string> vars{aux};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  const Ring big = make_ring(vars, ring->characteristic(), MonomialOrder::elimination(1));

  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * embed(f, big, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, big, 1));
  const GroebnerBasis basis = buchberger(gens, big);

  std::vector<Polynomial> out;
  for (const auto& g : basis.elements()) {
    if (g.leading_monomial()[0] != 0) continue;
    // The elimination order puts every t-free element's terms t-free.
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial m;
      for (int i = 0; i < ring->num_variables(); ++i) m.set(i, term.monomial[i + 1]);
      terms.push_back({m, term.coeff});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

int monomial_dimension(std::span<const Monomial> leading, int num_variables) {
  if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); }))
    return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading) supports.push_back(m.support());
  int best = 0;
  const std::uint32_t limit = 1u << num_variables;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) {
      return (s & ~subset) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& a) {
  const auto leads = a.groebner_basis().leading_monomials();
  return monomial_dimension(leads, a.ring()->num_variables());
}

HilbertSeries hilbert_series(const Ideal& a) {
  const auto leads = a.groebner_basis().leading_monomials();
  return hilbert_series_monomial(leads, *a.ring());
}

BigInt length_quotient(const Ideal& a) {
  const GroebnerBasis& basis = a.groebner_basis();
  const auto leads = basis.leading_monomials();
  const int r = a.ring()->num_variables();
  const int dim = monomial_dimension(leads, r);
  if (dim > 0)
    throw NotFiniteLength("quotient has dimension " + std::to_string(dim) + ", not finite length");
  if (dim < 0) return 0;
  // Zero-dimensional: some power of every variable is a leading monomial.
  int bound = 0;
  for (int v = 0; v < r; ++v) {
    int power = 0;
    for (const auto& m : leads)
      if (m.support() == (1u << v) && (power == 0 || m[v] < power)) power = m[v];
    if (power == 0) throw InternalInconsistency("zero-dimensional ideal lacks a pure power");
    bound += power - 1;
  }
  const auto layers = standard_monomials_up_to(basis, bound + 1);
  if (!layers.back().empty()) throw InternalInconsistency("standard monomials beyond the staircase");
  BigInt total = 0;
  for (const auto& layer : layers) {
    if (layer.empty()) break;
    total += static_cast<unsigned long>(layer.size());
  }
  return total;
}

bool is_mprimary(const Ideal& a) { return krull_dimension(a) == 0; }

}  // namespace chernlab
