#include <atlas/catalog.hpp>
#include <atlas/config.hpp>
#include <atlas/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

namespace atlas {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

SignClass sign_from_string(const std::string& s) {
  if (s == "positive") return SignClass::Positive;
  if (s == "null") return SignClass::Null;
  if (s == "negative") return SignClass::Negative;
  throw std::invalid_argument("unknown sign '" + s + "'");
}

std::vector<std::pair<std::size_t, InvariantRecord>> read_records(
    const std::string& path, std::vector<CorruptLineReport>& corrupt) {
  std::vector<std::pair<std::size_t, InvariantRecord>> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.emplace_back(lineno, from_json_line(line));
    } catch (const Error& e) {
      corrupt.push_back({lineno, e.what()});
    }
  }
  if (in.bad()) throw Error(ErrorKind::IoFailure, "error reading " + path);
  return out;
}

}  // namespace

std::size_t InvariantRecord::nvars() const {
  const auto colon = key.find(':');
  const auto end = std::min(key.find('@'), key.size());
  if (colon == std::string::npos || colon >= end) return 0;
  return static_cast<std::size_t>(std::count(key.begin() + colon, key.begin() + end, ',')) + 1;
}

InvariantRecord compute_record(const LinkDescriptor& link) {
  const auto& ws = link.weights;
  InvariantRecord rec;
  rec.key = link.key();
  rec.sign = classify_sign(ws);
  rec.middle_betti = betti(ws).middle_betti;
  if (link.exponents) {
    rec.torsion = torsion_closed_form(*link.exponents).to_string();
    rec.sphere = sphere_verdict(*link.exponents);
    if (link.exponents->size() == 3 || link.exponents->size() == 5)
      rec.signature = brieskorn_signature(*link.exponents).signature;
  } else {
    rec.torsion = ws.nvars() == 4 && is_well_formed(ws) ? "torsion-free" : "unknown";
    rec.sphere = sphere_verdict(ws);
  }
  if (ws.nvars() >= 3) {
    const long n = static_cast<long>(ws.nvars()) - 2;
    switch (rec.sign) {
      case SignClass::Positive:
        rec.constants_note = ConstantsNote{n, 2 * n, 0, "einstein"};
        break;
      case SignClass::Null:
        rec.constants_note = ConstantsNote{n, -2, 2 * n + 2, "null"};
        break;
      case SignClass::Negative:
        // lorentzian_scale = -1
        rec.constants_note = ConstantsNote{n, -2 * n - 4, 4 * n + 4, "lorentzian"};
        break;
    }
  }
  rec.tool_version = kToolVersion;
  return rec;
}

std::optional<std::string> verify_record(const InvariantRecord& rec) {
  InvariantRecord fresh;
  try {
    fresh = compute_record(parse_link(rec.key));
  } catch (const Error& e) {
    return std::string("key does not parse: ") + e.what();
  }
  if (fresh.key != rec.key) return "key is not canonical (expected " + fresh.key + ")";
  if (fresh.sign != rec.sign) return "sign";
  if (fresh.middle_betti != rec.middle_betti) return "middle_betti";
  if (fresh.torsion != rec.torsion) return "torsion";
  if (fresh.sphere != rec.sphere) return "sphere";
  if (fresh.signature != rec.signature) return "signature";
  if (fresh.constants_note != rec.constants_note) return "constants_note";
  return std::nullopt;
}

std::string to_json_line(const InvariantRecord& rec) {
  json j;
  j["key"] = rec.key;
  j["sign"] = to_string(rec.sign);
  j["middle_betti"] = integer_json(rec.middle_betti);
  j["torsion"] = rec.torsion;
  j["sphere"] = {{"kind", to_string(rec.sphere.kind)},
                 {"bp8_residue", rec.sphere.bp8_residue ? json(*rec.sphere.bp8_residue) : json(nullptr)}};
  j["signature"] = rec.signature ? integer_json(*rec.signature) : json(nullptr);
  if (rec.constants_note) {
    const auto& c = *rec.constants_note;
    j["constants_note"] = {{"n", c.n},
                           {"lambda", to_string(c.lambda)},
                           {"nu", to_string(c.nu)},
                           {"normalization", c.normalization}};
  } else {
    j["constants_note"] = nullptr;
  }
  j["tool_version"] = rec.tool_version;
  j["timestamp"] = rec.timestamp;
  return j.dump();
}

InvariantRecord from_json_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    InvariantRecord rec;
    rec.key = j.at("key").get<std::string>();
    rec.sign = sign_from_string(j.at("sign").get<std::string>());
    rec.middle_betti = integer_from_json(j.at("middle_betti"));
    rec.torsion = j.at("torsion").get<std::string>();
    const auto& s = j.at("sphere");
    const auto kind = sphere_kind_from_string(s.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown sphere kind");
    rec.sphere.kind = *kind;
    if (!s.at("bp8_residue").is_null()) rec.sphere.bp8_residue = s.at("bp8_residue").get<int>();
    if (!j.at("signature").is_null()) rec.signature = integer_from_json(j.at("signature"));
    if (const auto& c = j.at("constants_note"); !c.is_null()) {
      rec.constants_note = ConstantsNote{c.at("n").get<long>(),
                                         parse_rational(c.at("lambda").get<std::string>()),
                                         parse_rational(c.at("nu").get<std::string>()),
                                         c.at("normalization").get<std::string>()};
    }
    rec.tool_version = j.at("tool_version").get<std::string>();
    rec.timestamp = j.at("timestamp").get<std::string>();
    return rec;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::CorruptLine, e.what());
  }
}

bool CatalogFilter::matches(const InvariantRecord& rec) const {
  if (sign && rec.sign != *sign) return false;
  if (middle_betti && rec.middle_betti != *middle_betti) return false;
  if (sphere && rec.sphere.kind != *sphere) return false;
  if (nvars && rec.nvars() != *nvars) return false;
  return true;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AppendReport Catalog::append(std::vector<InvariantRecord> records) {
  std::lock_guard lock(write_mutex_);
  AppendReport report;
  std::set<std::string> keys;
  for (auto& [line, rec] : read_records(path_, report.corrupt)) keys.insert(rec.key);

  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot open " + path_ + " for appending");
  const auto stamp = utc_timestamp();
  for (auto& rec : records) {
    if (!keys.insert(rec.key).second) {
      ++report.skipped;
      continue;
    }
    if (rec.timestamp.empty()) rec.timestamp = stamp;
    out << to_json_line(rec) << '\n';
    ++report.written;
  }
  out.flush();
  if (!out) throw Error(ErrorKind::IoFailure, "write to " + path_ + " failed");
  return report;
}

QueryReport Catalog::query(const CatalogFilter& filter) const {
  QueryReport report;
  for (auto& [line, rec] : read_records(path_, report.corrupt))
    if (filter.matches(rec)) report.records.push_back(std::move(rec));
  return report;
}

}  // namespace atlas
