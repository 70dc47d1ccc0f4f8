#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chernlab/resolutions.hpp"
#include "chernlab_cli/problem_file.hpp"
#include "chernlab_cli/report.hpp"

namespace {

using namespace chernlab;
using namespace chernlab::cli;

enum Exit { kOk = 0, kInconsistent = 1, kSchema = 2, kHypothesis = 3, kFitUnstable = 4 };

struct FileOptions {
  std::string path;
  std::optional<int> max_power;
  std::optional<std::uint64_t> prime;
  bool json = false;
  bool force = false;
};

void add_file_options(CLI::App* cmd, FileOptions& opts) {
  cmd->add_option("file", opts.path, "problem file (JSON)")->required();
  cmd->add_option("--max-power", opts.max_power, "largest n to compute")->check(CLI::Range(1, 1000));
  cmd->add_option("--prime", opts.prime, "override the characteristic of the problem file");
  cmd->add_flag("--json", opts.json, "emit a JSON report");
  cmd->add_flag("--force", opts.force, "continue when hypothesis checks fail");
}

Verifier load(const FileOptions& opts) {
  ProblemFile file = load_problem(opts.path);
  if (opts.prime) {
    if (!is_prime(*opts.prime)) throw SchemaError("--prime " + std::to_string(*opts.prime) + " is not prime");
    file.characteristic = *opts.prime;
  }
  if (opts.max_power) file.max_power = *opts.max_power;
  return Verifier(to_instance(file));
}

// Returns true when the caller should stop with exit code 3.
bool gate(const HypothesisReport& hyp, const FileOptions& opts) {
  if (hyp.passed()) return false;
  for (const auto& c : hyp.checks)
    if (!c.passed && !c.informational)
      std::cerr << (opts.force ? "warning" : "error") << ": hypothesis check '" << c.name << "' failed: "
                << c.witness << "\n";
  if (opts.force) return false;
  if (opts.json) std::cout << nlohmann::json{{"hypotheses", hypotheses_json(hyp)}}.dump(2) << "\n";
  return true;
}

int cmd_hilbert(const FileOptions& opts) {
  Verifier v = load(opts);
  if (gate(v.check_hypotheses(), opts)) return kHypothesis;
  const auto& values = v.k_lengths();
  if (opts.json)
    std::cout << lengths_json(values).dump(2) << "\n";
  else
    print_lengths(std::cout, values);
  return kOk;
}

int cmd_coeffs(const FileOptions& opts) {
  Verifier v = load(opts);
  if (gate(v.check_hypotheses(), opts)) return kHypothesis;
  const auto& k = v.hilbert_k();
  const BigInt& lambda = v.torsion_model().lambda();
  const CmVerdict cm = cm_test(k.coefficients.front(), v.k_lengths().at(1));
  if (opts.json)
    std::cout << coeffs_json(k, lambda, cm).dump(2) << "\n";
  else
    print_coeffs(std::cout, k, lambda, cm);
  return kOk;
}

int cmd_verify(const FileOptions& opts) {
  Verifier v = load(opts);
  if (gate(v.check_hypotheses(), opts)) return kHypothesis;
  const VerificationReport report = v.run(opts.force);
  if (opts.json)
    std::cout << report_json(report).dump(2) << "\n";
  else
    print_report(std::cout, report);
  for (const auto& id : report.identities)
    if (id.status == Status::Fail) return kInconsistent;
  return kOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const FitError& e) {
    std::cerr << "error: fit failed: " << e.what() << "\n";
    return kFitUnstable;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const NotFiniteLength& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const NotHomogeneous& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chernlab: Hilbert coefficients of parameter ideals over F_p"};
  app.require_subcommand(1);

  FileOptions hilbert_opts, coeffs_opts, verify_opts;
  auto* hilbert = app.add_subcommand("hilbert", "lengths H(K,n) = lambda(R/K^n)");
  add_file_options(hilbert, hilbert_opts);
  auto* coeffs = app.add_subcommand("coeffs", "Hilbert coefficients, CM verdict and Chern sign");
  add_file_options(coeffs, coeffs_opts);
  auto* verify = app.add_subcommand("verify", "hypothesis checks and identity verification");
  add_file_options(verify, verify_opts);

  int d = 0, n = 0;
  bool betti_json_flag = false;
  auto* betti = app.add_subcommand("betti", "Eagon-Northcott Betti numbers of S/J^n");
  betti->add_option("--d", d, "number of parameters")->required()->check(CLI::Range(1, 64));
  betti->add_option("--n", n, "power")->required()->check(CLI::Range(1, 10000));
  betti->add_flag("--json", betti_json_flag, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  if (*hilbert) return guarded([&] { return cmd_hilbert(hilbert_opts); });
  if (*coeffs) return guarded([&] { return cmd_coeffs(coeffs_opts); });
  if (*verify) return guarded([&] { return cmd_verify(verify_opts); });
  return guarded([&] {
    if (betti_json_flag)
      std::cout << betti_json(d, n).dump(2) << "\n";
    else
      print_betti(std::cout, d, n);
    return kOk;
  });
}
