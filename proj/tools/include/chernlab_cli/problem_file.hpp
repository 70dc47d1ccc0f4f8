#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chernlab/errors.hpp"
#include "chernlab/verifier.hpp"

namespace chernlab::cli {

// Malformed problem file: bad JSON, wrong field types, bad polynomials.
class SchemaError : public Error {
 public:
  using Error::Error;
};

struct ProblemFile {
  std::uint64_t characteristic = RingContext::kDefaultCharacteristic;
  std::vector<std::string> variables;
  std::string monomial_order = "grevlex";
  std::vector<std::vector<std::string>> ideals;
  std::vector<std::string> parameters;
  std::optional<int> max_power;
};

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile load_problem(const std::filesystem::path& path);

// Builds the ring and parses every polynomial. Parse failures become
// SchemaError naming the offending field.
ProblemInstance to_instance(const ProblemFile& file);

}  // namespace chernlab::cli
