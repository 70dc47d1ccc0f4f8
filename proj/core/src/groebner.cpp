#include "chernlab/groebner.hpp"

#include <algorithm>
#include <unordered_set>

#include "chernlab/errors.hpp"

namespace chernlab {

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> elements, bool truncated)
    : ring_(std::move(ring)), elements_(std::move(elements)), truncated_(truncated) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

struct Divisor {
  const Polynomial* poly;
  Monomial lead;
  std::uint32_t mask;
};

class Reducer {
 public:
  explicit Reducer(const Ring& ring) : ring_(ring) {}

  void add(const Polynomial& g) {
    divisors_.push_back({&g, g.leading_monomial(), g.leading_monomial().support()});
  }
  void clear() { divisors_.clear(); }

  const Divisor* find(const Monomial& m) const {
    const std::uint32_t mask = m.support();
    for (const auto& d : divisors_)
      if ((d.mask & ~mask) == 0 && d.lead.degree() <= m.degree() && d.lead.divides(m)) return &d;
    return nullptr;
  }

  // Full reduction. When `top_only` is set, stops at the first irreducible
  // leading term.
  Polynomial reduce(const Polynomial& f, bool top_only = false) const {
    const RingContext& R = *ring_;
    std::vector<Term> remainder;
    std::vector<Term> cur(f.terms().begin(), f.terms().end());
    std::vector<Term> next;
    std::size_t start = 0;
    while (start < cur.size()) {
      const Term lt = cur[start];
      const Divisor* d = find(lt.monomial);
      if (d == nullptr) {
        if (top_only) {
          remainder.insert(remainder.end(), cur.begin() + static_cast<std::ptrdiff_t>(start), cur.end());
          break;
        }
        remainder.push_back(lt);
        ++start;
        continue;
      }
      // cur[start+1..] - lt.coeff * (lt / lead) * tail(g); divisors are monic.
      const Monomial shift = lt.monomial / d->lead;
      const Coeff c = R.neg(lt.coeff);
      auto gt = d->poly->terms();
      next.clear();
      next.reserve(cur.size() - start + gt.size());
      std::size_t i = start + 1, j = 1;
      while (i < cur.size() && j < gt.size()) {
        const Monomial gm = gt[j].monomial * shift;
        const int cmp = R.compare(cur[i].monomial, gm);
        if (cmp > 0) {
          next.push_back(cur[i++]);
        } else if (cmp < 0) {
          next.push_back({gm, R.mul(gt[j++].coeff, c)});
        } else {
          const Coeff s = R.add(cur[i].coeff, R.mul(gt[j].coeff, c));
          if (s != 0) next.push_back({gm, s});
          ++i;
          ++j;
        }
      }
      for (; i < cur.size(); ++i) next.push_back(cur[i]);
      for (; j < gt.size(); ++j) next.push_back({gt[j].monomial * shift, R.mul(gt[j].coeff, c)});
      cur.swap(next);
      start = 0;
    }
    return Polynomial::from_sorted(ring_, std::move(remainder));
  }

 private:
  const Ring& ring_;
  std::vector<Divisor> divisors_;
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  std::uint64_t serial;
};

// Largest degree layer enumerated when probing for an exhausted degree.
constexpr std::size_t kCoverageProbeLimit = 200000;

class Buchberger {
 public:
  Buchberger(const Ring& ring, const GroebnerOptions& options)
      : ring_(ring), options_(options), reducer_(ring) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    homogeneous_ = std::all_of(generators.begin(), generators.end(),
                               [](const Polynomial& g) { return g.is_homogeneous(); });
    if (options_.degree_bound && !homogeneous_)
      throw DomainError("degree-truncated Groebner bases need homogeneous input");

    std::vector<Polynomial> input;
    for (const auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw ContextMismatch();
      if (!g.is_zero()) input.push_back(g);
    }
    // Low degrees first so that reductions of later inputs are cheap.
    std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->less(a.leading_monomial(), b.leading_monomial());
    });
    for (const auto& g : input) {
      if (unit_) break;
      Polynomial h = reduce_by_active(g);
      if (!h.is_zero()) insert(h.monic());
    }

    int finished_degree = -1;
    while (!pairs_.empty() && !unit_) {
      const std::size_t k = select_pair();
      Pair pair = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      if (options_.degree_bound && pair.lcm.degree() > *options_.degree_bound) {
        truncated_ = true;
        continue;
      }
      if (homogeneous_ && pair.lcm.degree() - 1 > finished_degree) {
        // Every pair of degree < lcm degree has been handled.
        bool complete = false;
        for (int s = finished_degree + 1; s < pair.lcm.degree() && !complete; ++s) complete = degree_covered(s);
        if (complete) {
          pairs_.clear();
          break;
        }
        finished_degree = pair.lcm.degree() - 1;
      }
      Polynomial h = reduce_by_active(s_polynomial(basis_[static_cast<std::size_t>(pair.i)],
                                                   basis_[static_cast<std::size_t>(pair.j)]));
      if (!h.is_zero()) insert(h.monic());
    }
    return finish();
  }

 private:
  Polynomial reduce_by_active(const Polynomial& f) {
    reducer_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) reducer_.add(basis_[k]);
    return reducer_.reduce(f);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    return best;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (homogeneous_ && a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const int cmp = ring_->compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    return a.serial < b.serial;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial h) {
    if (h.leading_monomial().is_one()) unit_ = true;
    const int hi = static_cast<int>(basis_.size());
    const Monomial hl = h.leading_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(0);

    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (int g = 0; g < hi; ++g) {
      if (!active_[static_cast<std::size_t>(g)]) continue;
      const Monomial& gl = basis_[static_cast<std::size_t>(g)].leading_monomial();
      cands.push_back({g, lcm(hl, gl), hl.coprime(gl)});
    }
    // Chain criterion among the new pairs: drop (h,g1) when another pair
    // (h,g2) has an lcm dividing lcm(h,g1); among equal lcms keep the last.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (b < a && cands[b].lcm == cands[a].lcm) continue;
        if (cands[b].lcm.divides(cands[a].lcm) &&
            (b > a || cands[b].lcm != cands[a].lcm)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Old pairs whose lcm is strictly divisible through h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!hl.divides(p.lcm)) return false;
      const Monomial& li = basis_[static_cast<std::size_t>(p.i)].leading_monomial();
      const Monomial& lj = basis_[static_cast<std::size_t>(p.j)].leading_monomial();
      return lcm(li, hl) != p.lcm && lcm(lj, hl) != p.lcm;
    });
    // First criterion on the survivors.
    for (const auto& c : cands)
      if (c.keep && !c.coprime) pairs_.push_back({c.g, hi, c.lcm, serial_++});

    for (int g = 0; g < hi; ++g)
      if (active_[static_cast<std::size_t>(g)] &&
          hl.divides(basis_[static_cast<std::size_t>(g)].leading_monomial()))
        active_[static_cast<std::size_t>(g)] = 0;
    active_[static_cast<std::size_t>(hi)] = 1;
  }

  // Whether every monomial of degree s is divisible by an active leading
  // monomial. For homogeneous ideals this means the quotient vanishes from
  // degree s on and all remaining S-pairs reduce to zero.
  bool degree_covered(int s) const {
    std::vector<Monomial> leads;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) leads.push_back(basis_[k].leading_monomial());
    if (leads.empty()) return false;
    const int r = ring_->num_variables();
    // Standard monomials form an order ideal: grow degree by degree.
    std::vector<Monomial> layer{Monomial{}};
    auto standard = [&](const Monomial& m) {
      return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    if (!standard(layer.front())) return true;
    for (int deg = 1; deg <= s; ++deg) {
      std::unordered_set<Monomial, MonomialHash> next;
      for (const auto& m : layer)
        for (int v = 0; v < r; ++v) {
          Monomial x = m * Monomial::variable(v);
          if (!next.contains(x) && standard(x)) next.insert(x);
        }
      if (next.empty()) return true;
      if (next.size() > kCoverageProbeLimit) return false;
      layer.assign(next.begin(), next.end());
    }
    return false;
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> reduced;
    if (unit_) {
      reduced.push_back(Polynomial::constant(ring_, 1));
      return GroebnerBasis(ring_, std::move(reduced), truncated_);
    }
    std::vector<const Polynomial*> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(&basis_[k]);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial* a, const Polynomial* b) {
      return ring_->less(a->leading_monomial(), b->leading_monomial());
    });
    // Interreduce tails against the other minimal elements.
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      reducer_.clear();
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (a != b) reducer_.add(*minimal[b]);
      const Polynomial& g = *minimal[a];
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial rest = reducer_.reduce(Polynomial::from_sorted(ring_, std::move(tail)));
      std::vector<Term> terms{g.leading_term()};
      terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
      reduced.push_back(Polynomial::from_sorted(ring_, std::move(terms)));
    }
    return GroebnerBasis(ring_, std::move(reduced), truncated_);
  }

  const Ring& ring_;
  GroebnerOptions options_;
  Reducer reducer_;
  std::vector<Polynomial> basis_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  std::uint64_t serial_ = 0;
  bool homogeneous_ = false;
  bool unit_ = false;
  bool truncated_ = false;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const Ring& ring,
                         const GroebnerOptions& options) {
  return Buchberger(ring, options).run(generators);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> monic_divisors) {
  Reducer reducer(f.ring());
  for (const auto& g : monic_divisors) {
    if (!same_ring(g.ring(), f.ring())) throw ContextMismatch();
    if (g.is_zero() || g.leading_coeff() != 1) throw DomainError("divisors must be monic");
    reducer.add(g);
  }
  return reducer.reduce(f);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!same_ring(f.ring(), basis.ring())) throw ContextMismatch();
  return normal_form(f, basis.elements());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw ContextMismatch();
  const RingContext& R = *f.ring();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), R.inv(f.leading_coeff()));
  return sub_mul(a, R.inv(g.leading_coeff()), l / g.leading_monomial(), g);
}

std::vector<std::vector<Monomial>> standard_monomials_up_to(const GroebnerBasis& basis,
                                                            int max_degree) {
  if (max_degree < 0) throw DomainError("degree bound must be nonnegative");
  const RingContext& R = *basis.ring();
  const auto leads = basis.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(max_degree) + 1);
  if (!standard(Monomial{})) return out;
  out[0].push_back(Monomial{});
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::unordered_set<Monomial, MonomialHash> seen;
    auto& layer = out[static_cast<std::size_t>(deg)];
    for (const auto& m : out[static_cast<std::size_t>(deg) - 1])
      for (int v = 0; v < R.num_variables(); ++v) {
        Monomial x = m * Monomial::variable(v);
        if (seen.insert(x).second && standard(x)) layer.push_back(x);
      }
    std::sort(layer.begin(), layer.end(),
              [&](const Monomial& a, const Monomial& b) { return R.compare(a, b) > 0; });
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(const RingContext& ring, int degree) {
  const int r = ring.num_variables();
  std::vector<Monomial> out;
  Monomial m;
  // Compositions of `degree` into r parts.
  auto rec = [&](auto& self, int var, int left) -> void {
    if (var == r - 1) {
      m.set(var, left);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace chernlab
