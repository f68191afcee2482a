#include "ulab/config.hpp"

#include "ulab/error.hpp"
#include "ulab/hyper/hyperreal.hpp"
#include "ulab/words/word_codec.hpp"

#include <fstream>

namespace ulab {

RunConfig::RunConfig()
    : frozen_tail_template(words::kDefaultFrozenTail),
      coordinate_quality{{3, "location x"},      {4, "location y"},         {5, "location z"},
                         {6, "location t"},      {7, "positive charge"},    {8, "negative charge"},
                         {9, "inertial mass"},   {11, "gravitational mass"}, {13, "rest mass"}} {}

void RunConfig::validate() const {
  if (truncation_order < 2) fail(Errc::InvalidArgument, "truncation order must be >= 2");
  if (decimal_digits < 20) fail(Errc::InvalidArgument, "decimal precision must be >= 20 digits");
  if (characteristic_count < 1) fail(Errc::InvalidArgument, "characteristic count f must be >= 1");
  if (frozen_tail_template.find("{i}") == std::string::npos)
    fail(Errc::InvalidArgument, "frozen tail template needs an {i} slot");
  for (const auto& [ch, coord] : characteristic_coordinate)
    if (ch < 1 || coord < 3) fail(Errc::InvalidArgument, "characteristic coordinates must map i >= 1 to index >= 3");
}

void RunConfig::apply() const {
  validate();
  hyper::set_default_order(truncation_order);
  hyper::set_decimal_digits(decimal_digits);
}

int RunConfig::coordinate_for(int characteristic) const {
  if (auto it = characteristic_coordinate.find(characteristic); it != characteristic_coordinate.end())
    return it->second;
  return characteristic + 2;
}

std::string RunConfig::quality_name(int coordinate) const {
  if (auto it = coordinate_quality.find(coordinate); it != coordinate_quality.end()) return it->second;
  return "a" + std::to_string(coordinate);
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    c.truncation_order = j.value("truncation_order", c.truncation_order);
    c.decimal_digits = j.value("decimal_digits", c.decimal_digits);
    if (j.contains("alphabet")) c.alphabet_path = j.at("alphabet").get<std::string>();
    c.frozen_tail_template = j.value("frozen_tail_template", c.frozen_tail_template);
    c.characteristic_count = j.value("f", c.characteristic_count);
    c.seed = j.value("seed", c.seed);
    c.prime_limit = j.value("prime_limit", c.prime_limit);
    if (j.contains("characteristic_coordinate"))
      for (const auto& [k, v] : j.at("characteristic_coordinate").items()) c.characteristic_coordinate[std::stoi(k)] = v.get<int>();
    if (j.contains("coordinate_quality")) {
      c.coordinate_quality.clear();
      for (const auto& [k, v] : j.at("coordinate_quality").items()) c.coordinate_quality[std::stoi(k)] = v.get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("config: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "config: map keys must be integers");
  }
  c.validate();
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, "config " + path.string() + ": " + e.what());
  }
  RunConfig c = from_json(j);
  if (c.alphabet_path && c.alphabet_path->is_relative()) c.alphabet_path = path.parent_path() / *c.alphabet_path;
  return c;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["truncation_order"] = truncation_order;
  j["decimal_digits"] = decimal_digits;
  if (alphabet_path) j["alphabet"] = alphabet_path->string();
  j["frozen_tail_template"] = frozen_tail_template;
  j["f"] = characteristic_count;
  j["seed"] = seed;
  j["prime_limit"] = prime_limit;
  for (const auto& [k, v] : characteristic_coordinate) j["characteristic_coordinate"][std::to_string(k)] = v;
  for (const auto& [k, v] : coordinate_quality) j["coordinate_quality"][std::to_string(k)] = v;
  return j;
}

}  // namespace ulab
