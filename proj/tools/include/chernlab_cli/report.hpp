#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "chernlab/hilbert_coeffs.hpp"
#include "chernlab/verifier.hpp"

namespace chernlab::cli {

// Integers are written as decimal strings so consumers never overflow.
nlohmann::json lengths_json(const std::map<int, BigInt>& values);
nlohmann::json dataset_json(const HilbertDataset& data);
nlohmann::json hypotheses_json(const HypothesisReport& report);
nlohmann::json coeffs_json(const HilbertDataset& k, const BigInt& lambda_l, const CmVerdict& cm);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json betti_json(int d, int n);

void print_hypotheses(std::ostream& out, const HypothesisReport& report);
void print_lengths(std::ostream& out, const std::map<int, BigInt>& values);
void print_coeffs(std::ostream& out, const HilbertDataset& k, const BigInt& lambda_l, const CmVerdict& cm);
void print_report(std::ostream& out, const VerificationReport& report);
void print_betti(std::ostream& out, int d, int n);

}  // namespace chernlab::cli
