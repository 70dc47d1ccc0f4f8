#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chernlab/bigint.hpp"
#include "chernlab/graded_module.hpp"
#include "chernlab/hilbert_coeffs.hpp"
#include "chernlab/ideal.hpp"

namespace chernlab {

// Ideals I_1..I_g of S and parameters a_1..a_d whose images should form a
// system of parameters of R = S / (I_1 ∩ ... ∩ I_g).
struct ProblemInstance {
  Ring ring;
  std::vector<std::vector<Polynomial>> ideals;
  std::vector<Polynomial> parameters;
  // 0 selects the default 2d + 4.
  int max_power = 0;
};

ProblemInstance make_instance(const Ring& ring, const std::vector<std::vector<std::string>>& ideals,
                              const std::vector<std::string>& parameters, int max_power = 0);

// Applies the substitution x_j -> images[j] to every generator and parameter.
ProblemInstance change_coordinates(const ProblemInstance& inst, std::span<const Polynomial> images);

int default_max_power(int d);

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  std::string witness;
  // Informational checks do not affect the overall hypothesis verdict.
  bool informational = false;
};

struct HypothesisReport {
  std::vector<CheckResult> checks;
  int num_variables = 0;
  int num_ideals = 0;
  int dimension = -1;  // d = dim S/∩I_i
  int height = -1;     // h = r - dim S/I_1
  std::vector<int> component_dimensions;
  bool identities_applicable = false;  // d >= 2

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

enum class Status { Pass, Fail, NotApplicable };
std::string to_string(Status status);

// One side-by-side equality "label: lhs = rhs".
struct Equation {
  std::string label;
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

struct IdentityResult {
  std::string name;
  Status status = Status::NotApplicable;
  std::string note;
  std::vector<Equation> equations;
};

struct VerificationReport {
  HypothesisReport hypotheses;
  int max_power = 0;
  std::optional<HilbertDataset> hilbert_k;  // H(K, n)
  std::optional<HilbertDataset> hilbert_l;  // H_J(L, n)
  std::optional<BigInt> lambda_l;
  std::optional<BigInt> colength;  // lambda(R/K)
  std::optional<bool> annihilates;
  std::optional<CmVerdict> cm;
  std::vector<IdentityResult> identities;  // ordered by name
  bool overall = false;

  const IdentityResult* find(const std::string& name) const;
};

// Runs the engine on one instance. Derived data is computed on demand and
// cached; lengths for distinct n are computed concurrently.
class Verifier {
 public:
  explicit Verifier(ProblemInstance inst);

  const ProblemInstance& instance() const { return inst_; }
  // False when some generator or parameter is not homogeneous of positive
  // degree; no ideal is built in that case.
  bool well_formed() const { return parameters_.has_value(); }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  const Ideal& parameters() const;
  const Ideal& core();
  int dimension();
  int max_power();

  HypothesisReport check_hypotheses();

  // H(K, n) = lambda(R/K^n) for n = 1..max_power, raw and fitted.
  const std::map<int, BigInt>& k_lengths();
  const HilbertDataset& hilbert_k();
  // lambda(S/(I_i + J^n)) for n = 1..max_power.
  const std::map<int, BigInt>& component_lengths(int i);
  const TorsionModuleModel& torsion_model();
  // H_J(L, n) := lambda(Tor_1(L, S/J^n)) from the length alternating sum.
  const std::map<int, BigInt>& tor1_lengths();
  const HilbertDataset& hilbert_l();

  IdentityResult e0_additivity_check();
  IdentityResult verify_part1();
  IdentityResult verify_part2();
  IdentityResult lemma_ko_equivalence();
  IdentityResult negativity_check();

  // Full pipeline. Identities are skipped unless the hypotheses pass or
  // `force` is set.
  VerificationReport run(bool force = false);

 private:
  void compute_lengths();

  ProblemInstance inst_;
  std::string malformed_;
  std::vector<Ideal> ideals_;
  std::optional<Ideal> parameters_;
  std::optional<Ideal> core_;
  std::optional<int> dimension_;
  std::map<int, BigInt> k_values_;
  std::vector<std::map<int, BigInt>> component_values_;
  std::optional<HilbertDataset> hilbert_k_;
  std::optional<TorsionModuleModel> model_;
  std::map<int, BigInt> tor1_values_;
  std::optional<HilbertDataset> hilbert_l_;
  bool lengths_done_ = false;
};

}  // namespace chernlab
