#include <atlas/config.hpp>
#include <atlas/error.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace atlas {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config load_config(const std::string& path, Config cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot read config " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      if (key == "catalog") {
        cfg.catalog_path = value;
      } else if (key == "budget") {
        cfg.budget = Integer(value);
        if (cfg.budget <= 0) throw std::invalid_argument("budget");
      } else if (key == "threads") {
        const long t = std::stol(value);
        if (t < 0) throw std::invalid_argument("threads");
        cfg.threads = t == 0 ? std::max(1u, std::thread::hardware_concurrency())
                             : static_cast<unsigned>(t);
      } else {
        throw Error(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return cfg;
}

Config load_default_config() {
  if (const char* p = std::getenv(kConfigEnv); p && *p) return load_config(p);
  return {};
}

}  // namespace atlas
