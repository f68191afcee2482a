#pragma once

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace ulab {

/// Settings shared by the library front ends. Loaded from one JSON file;
/// every key is optional.
struct RunConfig {
  int truncation_order = 8;
  unsigned decimal_digits = 50;
  std::optional<std::filesystem::path> alphabet_path;
  std::string frozen_tail_template;  ///< "{i}" is replaced by the index
  int characteristic_count = 2;      ///< f
  std::map<int, int> characteristic_coordinate;  ///< characteristic i -> coordinate index
  std::map<int, std::string> coordinate_quality;  ///< coordinate index -> display name
  std::uint64_t seed = 7;
  std::uint64_t prime_limit = 100000;  ///< trial-division bound for identifier decoding

  RunConfig();

  /// Throws InvalidArgument when an invariant is broken.
  void validate() const;
  /// Pushes the series order and decimal precision into the kernel defaults.
  void apply() const;

  int coordinate_for(int characteristic) const;
  std::string quality_name(int coordinate) const;

  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

}  // namespace ulab
