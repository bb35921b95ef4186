#pragma once

#include <atlas/numeric.hpp>

#include <optional>
#include <string>

namespace atlas {

inline constexpr const char* kConfigEnv = "ATLAS_CONFIG";
inline constexpr const char* kToolVersion = "atlas 1.0.0";

struct Config {
  std::string catalog_path = "atlas_catalog.jsonl";
  Integer budget = Integer(100'000'000);  // elementary steps per search
  unsigned threads = 1;
};

/// Reads `key = value` lines (catalog, budget, threads); '#' starts a comment.
/// Unknown keys and malformed values throw InvalidInput, unreadable files IoFailure.
Config load_config(const std::string& path, Config base = {});

/// Loads the file named by ATLAS_CONFIG if set, else returns defaults.
Config load_default_config();

}  // namespace atlas
