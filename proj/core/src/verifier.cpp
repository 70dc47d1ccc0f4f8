#include "chernlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "chernlab/errors.hpp"
#include "chernlab/parse.hpp"
#include "chernlab/resolutions.hpp"

namespace chernlab {

namespace {

// Runs tasks on up to hardware_concurrency threads; rethrows the first error.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out;
}

IdentityResult finish(IdentityResult r) {
  const bool ok = std::all_of(r.equations.begin(), r.equations.end(),
                              [](const Equation& e) { return e.holds(); });
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

IdentityResult not_applicable(std::string name, std::string note) {
  IdentityResult r;
  r.name = std::move(name);
  r.status = Status::NotApplicable;
  r.note = std::move(note);
  return r;
}

}  // namespace

ProblemInstance make_instance(const Ring& ring, const std::vector<std::vector<std::string>>& ideals,
                              const std::vector<std::string>& parameters, int max_power) {
  ProblemInstance inst;
  inst.ring = ring;
  inst.max_power = max_power;
  for (const auto& gens : ideals) {
    std::vector<Polynomial> polys;
    for (const auto& text : gens) polys.push_back(parse_polynomial(text, ring));
    inst.ideals.push_back(std::move(polys));
  }
  for (const auto& text : parameters) inst.parameters.push_back(parse_polynomial(text, ring));
  return inst;
}

ProblemInstance change_coordinates(const ProblemInstance& inst, std::span<const Polynomial> images) {
  ProblemInstance out;
  out.ring = inst.ring;
  out.max_power = inst.max_power;
  for (const auto& gens : inst.ideals) {
    std::vector<Polynomial> polys;
    for (const auto& f : gens) polys.push_back(substitute(f, images));
    out.ideals.push_back(std::move(polys));
  }
  for (const auto& a : inst.parameters) out.parameters.push_back(substitute(a, images));
  return out;
}

int default_max_power(int d) { return 2 * d + 4; }

bool HypothesisReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.informational || c.passed; });
}

const CheckResult* HypothesisReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

const IdentityResult* VerificationReport::find(const std::string& name) const {
  for (const auto& r : identities)
    if (r.name == name) return &r;
  return nullptr;
}

Verifier::Verifier(ProblemInstance inst) : inst_(std::move(inst)) {
  if (!inst_.ring) throw DomainError("instance has no ring");
  if (inst_.ideals.empty()) throw DomainError("instance needs at least one ideal");
  for (std::size_t i = 0; i < inst_.ideals.size() && malformed_.empty(); ++i)
    for (const auto& f : inst_.ideals[i])
      if (!f.is_homogeneous()) {
        malformed_ = "I_" + std::to_string(i + 1) + " generator '" + f.to_string() + "' is not homogeneous";
        break;
      }
  for (const auto& a : inst_.parameters) {
    if (!malformed_.empty()) break;
    if (!a.is_homogeneous())
      malformed_ = "parameter '" + a.to_string() + "' is not homogeneous";
    else if (a.is_zero() || *a.degree() < 1)
      malformed_ = "parameter '" + a.to_string() + "' must have positive degree";
  }
  if (!malformed_.empty()) return;
  for (const auto& gens : inst_.ideals) ideals_.emplace_back(inst_.ring, gens);
  parameters_.emplace(inst_.ring, inst_.parameters);
}

const Ideal& Verifier::parameters() const {
  if (!parameters_) throw NotHomogeneous(malformed_);
  return *parameters_;
}

const Ideal& Verifier::core() {
  if (!core_) {
    if (!well_formed()) throw NotHomogeneous(malformed_);
    core_.emplace(ideal_intersect(ideals_));
  }
  return *core_;
}

int Verifier::dimension() {
  if (!dimension_) dimension_ = krull_dimension(core());
  return *dimension_;
}

int Verifier::max_power() {
  return inst_.max_power > 0 ? inst_.max_power : default_max_power(std::max(dimension(), 1));
}

HypothesisReport Verifier::check_hypotheses() {
  HypothesisReport rep;
  rep.num_variables = inst_.ring->num_variables();
  rep.num_ideals = static_cast<int>(inst_.ideals.size());
  const int r = rep.num_variables;

  rep.checks.push_back({"homogeneous", "all generators and parameters homogeneous, parameters of positive degree",
                        well_formed(), malformed_});
  if (!well_formed()) return rep;

  for (const auto& I : ideals_) rep.component_dimensions.push_back(krull_dimension(I));
  const auto& dims = rep.component_dimensions;
  const bool proper = std::all_of(dims.begin(), dims.end(), [](int d) { return d >= 0; });
  const bool equal = proper && std::all_of(dims.begin(), dims.end(), [&](int d) { return d == dims.front(); });
  rep.checks.push_back({"equal_dimensions", "dim S/I_i proper and equal for all i (equal heights)", equal,
                        "dims = [" + join_dims(dims) + "]"});
  if (proper) rep.height = r - dims.front();

  std::string bad_pairs;
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    for (std::size_t j = i + 1; j < ideals_.size(); ++j)
      if (!is_mprimary(ideal_sum(ideals_[i], ideals_[j]))) {
        if (!bad_pairs.empty()) bad_pairs += ", ";
        bad_pairs += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
  rep.checks.push_back({"pairwise_mprimary", "I_i + I_j primary to the maximal ideal for i != j",
                        bad_pairs.empty(), bad_pairs.empty() ? "" : "failing pairs " + bad_pairs});

  const int d = dimension();
  rep.dimension = d;
  const int count = static_cast<int>(inst_.parameters.size());
  rep.checks.push_back({"parameter_count", "number of parameters equals d = dim R", count == d,
                        "parameters = " + std::to_string(count) + ", d = " + std::to_string(d)});

  const int sop_dim = krull_dimension(ideal_sum(core(), parameters()));
  rep.checks.push_back({"system_of_parameters", "dim S/(core + J) = 0", sop_dim == 0,
                        "dim S/(core + J) = " + std::to_string(sop_dim)});

  const int j_dim = krull_dimension(parameters());
  rep.checks.push_back({"regular_sequence", "dim S/J = r - d (complete intersection)", j_dim == r - d,
                        "dim S/J = " + std::to_string(j_dim) + ", r - d = " + std::to_string(r - d)});

  rep.identities_applicable = d >= 2;
  CheckResult applicable{"dimension_at_least_two", "d >= 2 (identity modes)", d >= 2, "d = " + std::to_string(d)};
  applicable.informational = true;
  rep.checks.push_back(applicable);
  return rep;
}

void Verifier::compute_lengths() {
  if (lengths_done_) return;
  const int top = max_power();
  const std::size_t g = ideals_.size();
  const Ideal& core_ideal = core();
  const Ideal& J = parameters();
  // One task per (n, quotient); slot 0 is R/K^n, slot i is S/(I_i + J^n).
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(top), std::vector<BigInt>(g + 1));
  parallel_for(static_cast<std::size_t>(top) * (g + 1), [&](std::size_t task) {
    const auto n = static_cast<int>(task / (g + 1)) + 1;
    const std::size_t slot = task % (g + 1);
    const Ideal power = ideal_power(J, n);
    const Ideal& base = slot == 0 ? core_ideal : ideals_[slot - 1];
    table[static_cast<std::size_t>(n - 1)][slot] = length_quotient(ideal_sum(base, power));
  });
  component_values_.assign(g, {});
  for (int n = 1; n <= top; ++n) {
    const auto& row = table[static_cast<std::size_t>(n - 1)];
    k_values_[n] = row[0];
    for (std::size_t i = 0; i < g; ++i) component_values_[i][n] = row[i + 1];
  }
  lengths_done_ = true;
}

const std::map<int, BigInt>& Verifier::k_lengths() {
  compute_lengths();
  return k_values_;
}

const HilbertDataset& Verifier::hilbert_k() {
  if (!hilbert_k_) {
    compute_lengths();
    hilbert_k_ = fit_coefficients(k_values_, dimension());
    if (hilbert_k_->coefficients.front() < 1)
      throw InternalInconsistency("multiplicity e_0 must be positive");
  }
  return *hilbert_k_;
}

const std::map<int, BigInt>& Verifier::component_lengths(int i) {
  compute_lengths();
  return component_values_.at(static_cast<std::size_t>(i));
}

const TorsionModuleModel& Verifier::torsion_model() {
  if (!model_) model_.emplace(build_L(ideals_, core()));
  return *model_;
}

const std::map<int, BigInt>& Verifier::tor1_lengths() {
  if (tor1_values_.empty()) {
    compute_lengths();
    const auto& model = torsion_model();
    // Same alternating sum as tor1_via_lengths, reusing the length table.
    for (const auto& [n, k_len] : k_values_) {
      BigInt value = k_len;
      for (const auto& comp : component_values_) value -= comp.at(n);
      value += jn_colength(model, parameters(), n);
      tor1_values_[n] = value;
    }
  }
  return tor1_values_;
}

const HilbertDataset& Verifier::hilbert_l() {
  if (!hilbert_l_) hilbert_l_ = fit_coefficients(tor1_lengths(), std::max(dimension() - 1, 0));
  return *hilbert_l_;
}

IdentityResult Verifier::e0_additivity_check() {
  IdentityResult r;
  r.name = "e0_additivity";
  const int d = dimension();
  BigInt sum = 0;
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    const HilbertDataset comp = fit_coefficients(component_lengths(static_cast<int>(i)), d);
    r.equations.push_back({"e0(J, S/I_" + std::to_string(i + 1) + ")", comp.coefficients.front(),
                           comp.coefficients.front()});
    sum += comp.coefficients.front();
  }
  r.equations.push_back({"e0(K) = sum_i e0(J, S/I_i)", hilbert_k().coefficients.front(), sum});
  r.note = "multiplicity is additive over the components";
  return finish(std::move(r));
}

IdentityResult Verifier::verify_part1() {
  const int d = dimension();
  if (d < 2) return not_applicable("part1", "needs d >= 2");
  IdentityResult r;
  r.name = "part1";
  const auto& k = hilbert_k();
  const auto& l = hilbert_l();
  const BigInt& lambda = torsion_model().lambda();

  // Right side as a polynomial in the basis (-1)^j C(n+d-2-j, d-1-j).
  std::vector<BigInt> expected(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) expected[static_cast<std::size_t>(j)] = -k.coefficients[static_cast<std::size_t>(j) + 1];
  expected.back() += (d - 1) % 2 ? BigInt(-lambda) : lambda;
  for (int j = 0; j < d; ++j)
    r.equations.push_back({"coefficient " + std::to_string(j) + " of P_J(L,n)",
                           l.coefficients[static_cast<std::size_t>(j)], expected[static_cast<std::size_t>(j)]});

  auto rhs = [&](int n) {
    BigInt sum = lambda;
    for (int i = 1; i <= d; ++i) {
      BigInt term = k.coefficients[static_cast<std::size_t>(i)] * binomial(n + d - 1 - i, d - i);
      sum += i % 2 ? BigInt(-term) : term;
    }
    return sum;
  };
  const int n0 = std::max(k.stabilization_index, l.stabilization_index);
  for (const auto& [n, value] : l.values)
    if (n >= n0) r.equations.push_back({"H_J(L," + std::to_string(n) + ")", value, rhs(n)});
  if (ideals_.size() == 1) r.note = "L = 0; both sides vanish";
  return finish(std::move(r));
}

IdentityResult Verifier::verify_part2() {
  const int d = dimension();
  if (ideals_.size() < 2) return not_applicable("part2", "needs g >= 2");
  if (d < 2) return not_applicable("part2", "needs d >= 2");
  if (!annihilates(parameters(), torsion_model())) return not_applicable("part2", "J does not annihilate L");
  IdentityResult r;
  r.name = "part2";
  const auto& k = hilbert_k();
  const BigInt& lambda = torsion_model().lambda();
  for (int i = 1; i < d; ++i)
    r.equations.push_back({"e_" + std::to_string(i) + " = (-1)^" + std::to_string(i) + " lambda(L)",
                           k.coefficients[static_cast<std::size_t>(i)], i % 2 ? BigInt(-lambda) : lambda});
  r.equations.push_back({"e_" + std::to_string(d) + " = 0", k.coefficients[static_cast<std::size_t>(d)], 0});
  const BigInt& e0 = k.coefficients.front();
  for (const auto& [n, value] : k.values) {
    if (n < k.stabilization_index) continue;
    BigInt closed = e0 * binomial(n + d - 1, d);
    for (int i = 1; i < d; ++i) closed += lambda * binomial(n + d - 1 - i, d - i);
    r.equations.push_back({"P(K," + std::to_string(n) + ") closed form", value, closed});
  }
  return finish(std::move(r));
}

IdentityResult Verifier::lemma_ko_equivalence() {
  const int d = dimension();
  if (d < 1) return not_applicable("lemma_ko_equivalence", "needs d >= 1");
  if (!annihilates(parameters(), torsion_model()))
    return not_applicable("lemma_ko_equivalence", "J does not annihilate L");
  IdentityResult r;
  r.name = "lemma_ko_equivalence";
  const BigInt& lambda = torsion_model().lambda();
  for (const auto& [n, value] : tor1_lengths())
    r.equations.push_back({"Tor_1 length at n=" + std::to_string(n), value, tor1_closed_form(n, d, lambda)});
  return finish(std::move(r));
}

IdentityResult Verifier::negativity_check() {
  IdentityResult r;
  r.name = "negativity";
  const auto& k = hilbert_k();
  const BigInt e1 = k.coefficients.size() > 1 ? k.coefficients[1] : BigInt(0);
  const BigInt colength = k_values_.at(1);
  const CmVerdict cm = cm_test(k.coefficients.front(), colength);
  const ChernSign sign = chern_sign(e1);
  if (ideals_.size() >= 2) {
    // Not Cohen-Macaulay: e_1 < 0 and e_0 < lambda(R/K).
    r.equations.push_back({"sign(e_1) = -1", sgn(e1), -1});
    r.equations.push_back({"cm_test verdict (1 = CM)", cm.cohen_macaulay ? 1 : 0, 0});
    r.note = "g >= 2: R expected non-Cohen-Macaulay";
  } else {
    r.equations.push_back({"e_1 = 0", e1, 0});
    r.equations.push_back({"cm_test verdict (1 = CM)", cm.cohen_macaulay ? 1 : 0, 1});
    r.note = "g = 1: Cohen-Macaulay baseline";
  }
  r.note += "; chern_sign = " + to_string(sign);
  if (colength < cm.e0) r.note += "; warning: lambda(R/K) < e_0(K)";
  return finish(std::move(r));
}

VerificationReport Verifier::run(bool force) {
  VerificationReport rep;
  rep.hypotheses = check_hypotheses();
  if (!rep.hypotheses.passed() && !force) return rep;
  if (!well_formed()) return rep;
  rep.max_power = max_power();
  rep.hilbert_k = hilbert_k();
  rep.colength = k_values_.at(1);
  rep.cm = cm_test(rep.hilbert_k->coefficients.front(), *rep.colength);
  rep.lambda_l = torsion_model().lambda();
  rep.annihilates = annihilates(parameters(), torsion_model());
  if (dimension() >= 2) rep.hilbert_l = hilbert_l();

  rep.identities.push_back(e0_additivity_check());
  rep.identities.push_back(lemma_ko_equivalence());
  rep.identities.push_back(negativity_check());
  rep.identities.push_back(verify_part1());
  rep.identities.push_back(verify_part2());
  rep.overall = rep.hypotheses.passed() &&
                std::none_of(rep.identities.begin(), rep.identities.end(),
                             [](const IdentityResult& r) { return r.status == Status::Fail; });
  return rep;
}

}  // namespace chernlab
