#include "chernlab/graded_module.hpp"

#include <algorithm>

#include "chernlab/errors.hpp"

namespace chernlab {

namespace {

// Index of m inside a sorted (decreasing) layer of standard monomials.
int index_of(const RingContext& ring, const std::vector<Monomial>& layer, const Monomial& m) {
  auto it = std::lower_bound(layer.begin(), layer.end(), m, [&](const Monomial& a, const Monomial& b) {
    return ring.compare(a, b) > 0;
  });
  if (it == layer.end() || !(*it == m)) return -1;
  return static_cast<int>(it - layer.begin());
}

}  // namespace

int TorsionModuleModel::dimension(int s) const {
  if (s < 0 || !top_degree_ || s > *top_degree_) return 0;
  return static_cast<int>(pieces_[static_cast<std::size_t>(s)].basis.size());
}

const TorsionModuleModel::Coordinate& TorsionModuleModel::basis_element(int s, int k) const {
  if (dimension(s) <= k || k < 0) throw DomainError("basis index out of range");
  const Piece& piece = pieces_[static_cast<std::size_t>(s)];
  return piece.coordinates[static_cast<std::size_t>(piece.basis[static_cast<std::size_t>(k)])];
}

Vec TorsionModuleModel::ambient_vector(std::span<const Polynomial> tuple, int s) const {
  const Piece& piece = pieces_[static_cast<std::size_t>(s)];
  Vec v(piece.coordinates.size(), 0);
  const RingContext& R = *ring_;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Polynomial nf = normal_form(tuple[i], bases_[i]);
    for (const auto& t : nf.terms()) {
      if (t.monomial.degree() != s) throw DomainError("tuple entry is not homogeneous of the piece degree");
      const int idx = index_of(R, piece.standard[i], t.monomial);
      if (idx < 0) throw InternalInconsistency("normal form left the standard monomials");
      v[static_cast<std::size_t>(piece.component_offset[i] + idx)] = t.coeff;
    }
  }
  return v;
}

Vec TorsionModuleModel::project(const Vec& ambient, int s) const {
  const Piece& piece = pieces_[static_cast<std::size_t>(s)];
  const Vec reduced = piece.image->reduce(ambient);
  Vec out(piece.basis.size());
  for (std::size_t k = 0; k < piece.basis.size(); ++k)
    out[k] = reduced[static_cast<std::size_t>(piece.basis[k])];
  return out;
}

Vec TorsionModuleModel::coset(std::span<const Polynomial> tuple, int s) const {
  if (static_cast<int>(tuple.size()) != num_components()) throw DomainError("tuple has the wrong length");
  for (const auto& f : tuple)
    if (!same_ring(f.ring(), ring_)) throw ContextMismatch();
  if (dimension(s) == 0) return {};
  return project(ambient_vector(tuple, s), s);
}

const Matrix& TorsionModuleModel::multiplication(int v, int s) const {
  if (v < 0 || v >= ring_->num_variables()) throw DomainError("variable index out of range");
  static const Matrix empty;
  if (dimension(s) == 0) return empty;
  return mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
}

Matrix TorsionModuleModel::action(const Polynomial& f, int s) const {
  if (!same_ring(f.ring(), ring_)) throw ContextMismatch();
  if (!f.is_homogeneous()) throw NotHomogeneous("module action needs a homogeneous element");
  const int src = dimension(s);
  if (f.is_zero()) return Matrix(0, src);
  const int e = *f.degree();
  const int dst = dimension(s + e);
  Matrix out(dst, src);
  if (dst == 0 || src == 0) return out;
  const RingContext& R = *ring_;
  for (const auto& t : f.terms()) {
    // Identity on L_s, then one variable at a time.
    Matrix m(src, src);
    for (int k = 0; k < src; ++k) m.at(k, k) = 1;
    int deg = s;
    for (int v = 0; v < R.num_variables(); ++v)
      for (int rep = 0; rep < t.monomial[v]; ++rep) {
        m = multiply(R, multiplication(v, deg), m);
        ++deg;
      }
    for (std::size_t k = 0; k < out.data.size(); ++k)
      out.data[k] = R.add(out.data[k], R.mul(t.coeff, m.data[k]));
  }
  return out;
}

bool TorsionModuleModel::actions_commute() const {
  if (!top_degree_) return true;
  const RingContext& R = *ring_;
  const int r = R.num_variables();
  for (int s = 0; s + 2 <= *top_degree_; ++s)
    for (int u = 0; u < r; ++u)
      for (int v = u + 1; v < r; ++v) {
        Matrix uv = multiply(R, multiplication(v, s + 1), multiplication(u, s));
        Matrix vu = multiply(R, multiplication(u, s + 1), multiplication(v, s));
        if (uv.data != vu.data) return false;
      }
  return true;
}

TorsionModuleModel build_L(std::span<const Ideal> ideals, const Ideal& core) {
  if (ideals.empty()) throw DomainError("L needs at least one ideal");
  const Ring& ring = core.ring();
  for (const auto& I : ideals)
    if (!same_ring(I.ring(), ring)) throw ContextMismatch();

  TorsionModuleModel model(ring);
  HilbertSeries hs;
  for (const auto& I : ideals) {
    model.bases_.push_back(I.groebner_basis());
    hs = hs + hilbert_series(I);
  }
  hs = hs - hilbert_series(core);
  if (!hs.is_polynomial())
    throw NotFiniteLength("L has infinite length: Hilbert series " + hs.to_string() + " is not a polynomial");
  model.series_ = hs;
  model.top_degree_ = hs.numerator_degree();
  if (!model.top_degree_) return model;

  const int top = *model.top_degree_;
  const RingContext& R = *ring;
  const std::size_t g = ideals.size();
  std::vector<std::vector<std::vector<Monomial>>> standard(g);
  for (std::size_t i = 0; i < g; ++i) standard[i] = standard_monomials_up_to(model.bases_[i], top + 1);
  const auto core_standard = standard_monomials_up_to(core.groebner_basis(), top);

  for (int s = 0; s <= top; ++s) {
    TorsionModuleModel::Piece piece;
    int offset = 0;
    for (std::size_t i = 0; i < g; ++i) {
      piece.component_offset.push_back(offset);
      piece.standard.push_back(standard[i][static_cast<std::size_t>(s)]);
      for (const auto& m : piece.standard.back())
        piece.coordinates.push_back({static_cast<int>(i), m});
      offset += static_cast<int>(piece.standard.back().size());
    }
    piece.image.emplace(R, offset);
    model.pieces_.push_back(std::move(piece));

    // Diagonal image of (S/∩I_i)_s; injective since ∩I_i is the common kernel.
    for (const auto& m : core_standard[static_cast<std::size_t>(s)]) {
      std::vector<Polynomial> tuple(g, Polynomial::monomial(ring, m));
      Vec v = model.ambient_vector(tuple, s);
      if (!model.pieces_.back().image->insert(std::move(v)))
        throw InternalInconsistency("diagonal map is not injective in degree " + std::to_string(s));
    }
    auto& p = model.pieces_.back();
    p.basis = p.image->free_coordinates();
    if (BigInt(static_cast<unsigned long>(p.basis.size())) != hs.coefficient(s))
      throw InternalInconsistency("dim L_" + std::to_string(s) + " disagrees with the Hilbert series");
    model.lambda_ += static_cast<unsigned long>(p.basis.size());
  }

  const int r = R.num_variables();
  model.mult_.assign(static_cast<std::size_t>(r), {});
  for (int v = 0; v < r; ++v) {
    const Polynomial x = Polynomial::variable(ring, v);
    for (int s = 0; s <= top; ++s) {
      const auto& piece = model.pieces_[static_cast<std::size_t>(s)];
      const int dst = model.dimension(s + 1);
      Matrix m(dst, static_cast<int>(piece.basis.size()));
      if (dst > 0) {
        for (std::size_t k = 0; k < piece.basis.size(); ++k) {
          const auto& coord = piece.coordinates[static_cast<std::size_t>(piece.basis[k])];
          std::vector<Polynomial> tuple(g, Polynomial(ring));
          tuple[static_cast<std::size_t>(coord.component)] = Polynomial::monomial(ring, coord.monomial * x.leading_monomial());
          const Vec col = model.project(model.ambient_vector(tuple, s + 1), s + 1);
          for (int row = 0; row < dst; ++row) m.at(row, static_cast<int>(k)) = col[static_cast<std::size_t>(row)];
        }
      }
      model.mult_[static_cast<std::size_t>(v)].push_back(std::move(m));
    }
  }
  return model;
}

TorsionModuleModel build_L(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("L needs at least one ideal");
  return build_L(ideals, ideal_intersect(ideals));
}

BigInt lambda_L(const TorsionModuleModel& model) { return model.lambda(); }

bool annihilates(const Ideal& parameters, const TorsionModuleModel& model) {
  if (!model.top_degree()) return true;
  for (const auto& f : parameters.generators())
    for (int s = 0; s <= *model.top_degree(); ++s)
      if (!model.action(f, s).is_zero()) return false;
  return true;
}

BigInt jn_colength(const TorsionModuleModel& model, const Ideal& parameters, int n) {
  if (n < 0) throw DomainError("power must be nonnegative");
  if (n == 0 || !model.top_degree()) return 0;
  const int top = *model.top_degree();
  const RingContext& R = *model.ring();
  // Spanning vectors of J^k L per degree, starting from L itself.
  std::vector<std::vector<Vec>> span(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s)
    for (int k = 0; k < model.dimension(s); ++k) {
      Vec e(static_cast<std::size_t>(model.dimension(s)), 0);
      e[static_cast<std::size_t>(k)] = 1;
      span[static_cast<std::size_t>(s)].push_back(std::move(e));
    }
  for (int step = 0; step < n; ++step) {
    std::vector<Subspace> next;
    for (int s = 0; s <= top; ++s) next.emplace_back(R, model.dimension(s));
    for (const auto& f : parameters.generators()) {
      const int e = *f.degree();
      for (int s = 0; s + e <= top; ++s) {
        if (span[static_cast<std::size_t>(s)].empty()) continue;
        const Matrix a = model.action(f, s);
        for (const auto& w : span[static_cast<std::size_t>(s)])
          next[static_cast<std::size_t>(s + e)].insert(apply(R, a, w));
      }
    }
    for (int s = 0; s <= top; ++s) span[static_cast<std::size_t>(s)] = next[static_cast<std::size_t>(s)].rows();
  }
  BigInt spanned = 0;
  for (const auto& layer : span) spanned += static_cast<unsigned long>(layer.size());
  return model.lambda() - spanned;
}

}  // namespace chernlab
