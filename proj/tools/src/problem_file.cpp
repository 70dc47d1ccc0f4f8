#include "chernlab_cli/problem_file.hpp"

#include <fstream>
#include <set>

#include "chernlab/parse.hpp"

namespace chernlab::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"characteristic", "variables", "monomial_order", "ideals",
                                          "parameters",     "max_power", "description"};

std::vector<std::string> string_list(const json& value, const std::string& field) {
  if (!value.is_array()) throw SchemaError("'" + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw SchemaError("'" + field + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Polynomial parse_field(const std::string& text, const Ring& ring, const std::string& field) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw SchemaError(field + ": cannot parse '" + text + "': " + e.what());
  }
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) throw SchemaError("problem file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKnownKeys.contains(key)) throw SchemaError("unknown field '" + key + "'");
  for (const char* key : {"variables", "ideals", "parameters"})
    if (!doc.contains(key)) throw SchemaError(std::string("missing required field '") + key + "'");

  ProblemFile file;
  if (doc.contains("characteristic")) {
    const auto& p = doc["characteristic"];
    if (!p.is_number_unsigned()) throw SchemaError("'characteristic' must be a positive integer");
    file.characteristic = p.get<std::uint64_t>();
    if (!is_prime(file.characteristic)) throw SchemaError("characteristic " + p.dump() + " is not prime");
  }
  file.variables = string_list(doc["variables"], "variables");
  if (file.variables.empty()) throw SchemaError("'variables' must not be empty");
  if (doc.contains("monomial_order")) {
    const auto& o = doc["monomial_order"];
    if (!o.is_string() || (o != "grevlex" && o != "lex"))
      throw SchemaError("'monomial_order' must be \"grevlex\" or \"lex\"");
    file.monomial_order = o.get<std::string>();
  }
  const auto& ideals = doc["ideals"];
  if (!ideals.is_array() || ideals.empty()) throw SchemaError("'ideals' must be a nonempty array of arrays");
  for (std::size_t i = 0; i < ideals.size(); ++i)
    file.ideals.push_back(string_list(ideals[i], "ideals[" + std::to_string(i) + "]"));
  file.parameters = string_list(doc["parameters"], "parameters");
  if (doc.contains("max_power")) {
    const auto& m = doc["max_power"];
    if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 1000)
      throw SchemaError("'max_power' must be an integer in 1..1000");
    file.max_power = m.get<int>();
  }
  return file;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open problem file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": invalid JSON: " + e.what());
  }
  return parse_problem(doc);
}

ProblemInstance to_instance(const ProblemFile& file) {
  Ring ring;
  try {
    if (file.characteristic >= (1ULL << 31)) throw DomainError("characteristic must be below 2^31");
    ring = make_ring(file.variables, static_cast<Coeff>(file.characteristic),
                     file.monomial_order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  ProblemInstance inst;
  inst.ring = ring;
  inst.max_power = file.max_power.value_or(0);
  for (std::size_t i = 0; i < file.ideals.size(); ++i) {
    std::vector<Polynomial> gens;
    for (const auto& text : file.ideals[i])
      gens.push_back(parse_field(text, ring, "ideals[" + std::to_string(i) + "]"));
    inst.ideals.push_back(std::move(gens));
  }
  for (const auto& text : file.parameters) inst.parameters.push_back(parse_field(text, ring, "parameters"));
  return inst;
}

}  // namespace chernlab::cli
