#include "chernlab_cli/report.hpp"

#include <iomanip>

#include "chernlab/resolutions.hpp"

namespace chernlab::cli {

using nlohmann::json;

namespace {

json big(const BigInt& v) { return v.get_str(); }

json big_list(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(big(v));
  return out;
}

std::string joined(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].get_str();
  return out;
}

}  // namespace

json lengths_json(const std::map<int, BigInt>& values) {
  json out = json::array();
  for (const auto& [n, v] : values) out.push_back({{"n", n}, {"length", big(v)}});
  return out;
}

json dataset_json(const HilbertDataset& data) {
  return {{"d", data.d},
          {"e", big_list(data.coefficients)},
          {"n0", data.stabilization_index},
          {"values", lengths_json(data.values)}};
}

json hypotheses_json(const HypothesisReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"informational", c.informational},
                      {"witness", c.witness}});
  return {{"passed", report.passed()},
          {"num_variables", report.num_variables},
          {"num_ideals", report.num_ideals},
          {"dimension", report.dimension},
          {"height", report.height},
          {"component_dimensions", report.component_dimensions},
          {"identities_applicable", report.identities_applicable},
          {"checks", checks}};
}

json coeffs_json(const HilbertDataset& k, const BigInt& lambda_l, const CmVerdict& cm) {
  const BigInt e1 = k.coefficients.size() > 1 ? k.coefficients[1] : BigInt(0);
  return {{"e", big_list(k.coefficients)},
          {"n0", k.stabilization_index},
          {"cm", cm.cohen_macaulay},
          {"chern_sign", to_string(chern_sign(e1))},
          {"lambda_L", big(lambda_l)},
          {"colength", big(cm.colength)}};
}

json report_json(const VerificationReport& report) {
  json out = {{"overall", report.overall},
              {"max_power", report.max_power},
              {"hypotheses", hypotheses_json(report.hypotheses)}};
  out["hilbert_k"] = report.hilbert_k ? dataset_json(*report.hilbert_k) : json(nullptr);
  out["hilbert_l"] = report.hilbert_l ? dataset_json(*report.hilbert_l) : json(nullptr);
  out["lambda_L"] = report.lambda_l ? big(*report.lambda_l) : json(nullptr);
  out["colength"] = report.colength ? big(*report.colength) : json(nullptr);
  out["annihilates"] = report.annihilates ? json(*report.annihilates) : json(nullptr);
  out["cm"] = report.cm ? json(report.cm->cohen_macaulay) : json(nullptr);
  json identities = json::array();
  for (const auto& id : report.identities) {
    json equations = json::array();
    for (const auto& e : id.equations)
      equations.push_back({{"label", e.label}, {"lhs", big(e.lhs)}, {"rhs", big(e.rhs)}, {"holds", e.holds()}});
    identities.push_back({{"name", id.name}, {"status", to_string(id.status)}, {"note", id.note}, {"equations", equations}});
  }
  out["identities"] = identities;
  return out;
}

json betti_json(int d, int n) {
  const auto betti = en_betti_vector(n, d);
  BigInt euler = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) euler += i % 2 ? BigInt(-betti[i]) : betti[i];
  return {{"d", d}, {"n", n}, {"betti", big_list(betti)}, {"euler_characteristic", big(euler)}};
}

void print_hypotheses(std::ostream& out, const HypothesisReport& report) {
  out << "hypotheses: " << (report.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : report.checks) {
    const char* mark = c.passed ? "ok  " : (c.informational ? "info" : "FAIL");
    out << "  [" << mark << "] " << std::left << std::setw(24) << c.name << c.description;
    if (!c.witness.empty()) out << "  (" << c.witness << ")";
    out << "\n";
  }
}

void print_lengths(std::ostream& out, const std::map<int, BigInt>& values) {
  out << std::right << std::setw(4) << "n" << "  " << "H(K,n)\n";
  for (const auto& [n, v] : values) out << std::setw(4) << n << "  " << v << "\n";
}

void print_coeffs(std::ostream& out, const HilbertDataset& k, const BigInt& lambda_l, const CmVerdict& cm) {
  const BigInt e1 = k.coefficients.size() > 1 ? k.coefficients[1] : BigInt(0);
  out << "e          = (" << joined(k.coefficients) << ")\n"
      << "n0         = " << k.stabilization_index << "\n"
      << "lambda(L)  = " << lambda_l << "\n"
      << "lambda(R/K)= " << cm.colength << "\n"
      << "cm         = " << (cm.cohen_macaulay ? "true" : "false") << "\n"
      << "chern_sign = " << to_string(chern_sign(e1)) << "\n";
}

void print_report(std::ostream& out, const VerificationReport& report) {
  print_hypotheses(out, report.hypotheses);
  if (report.hilbert_k) {
    out << "max_power: " << report.max_power << "\n";
    print_coeffs(out, *report.hilbert_k, report.lambda_l.value_or(0), *report.cm);
    out << "J annihilates L: " << (report.annihilates.value_or(false) ? "yes" : "no") << "\n";
  }
  for (const auto& id : report.identities) {
    out << std::left << std::setw(22) << id.name << to_string(id.status);
    if (!id.note.empty()) out << "  (" << id.note << ")";
    out << "\n";
    for (const auto& e : id.equations)
      if (!e.holds()) out << "    mismatch: " << e.label << ": " << e.lhs << " != " << e.rhs << "\n";
  }
  out << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
}

void print_betti(std::ostream& out, int d, int n) {
  const json j = betti_json(d, n);
  const auto betti = en_betti_vector(n, d);
  for (std::size_t i = 0; i < betti.size(); ++i) out << "beta_" << i << " = " << betti[i] << "\n";
  out << "Euler characteristic = " << j["euler_characteristic"].get<std::string>() << "\n";
}

}  // namespace chernlab::cli
