#pragma once

#include <atlas/eta_einstein.hpp>
#include <atlas/milnor_orlik.hpp>
#include <atlas/parse.hpp>
#include <atlas/spheres.hpp>

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

/// Normalized eta-Einstein constants attached to a record, with the
/// normalization they were taken in ("einstein", "null" or "lorentzian").
struct ConstantsNote {
  long n;
  Rational lambda;
  Rational nu;
  std::string normalization;

  friend bool operator==(const ConstantsNote&, const ConstantsNote&) = default;
};

struct InvariantRecord {
  std::string key;
  SignClass sign;
  Integer middle_betti;
  std::string torsion;
  SphereVerdict sphere;
  std::optional<Integer> signature;
  std::optional<ConstantsNote> constants_note;
  std::string tool_version;
  std::string timestamp;  // empty until the record is written

  std::size_t nvars() const;
  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Computes every invariant available for the link. The signature is only
/// included for 3 or 5 exponents. No timestamp is set.
InvariantRecord compute_record(const LinkDescriptor& link);

/// Recomputes the record from its key and reports the first mismatching
/// field, or nullopt if it verifies.
std::optional<std::string> verify_record(const InvariantRecord& rec);

std::string to_json_line(const InvariantRecord& rec);
/// Throws CorruptLine on malformed input.
InvariantRecord from_json_line(const std::string& line);

struct CatalogFilter {
  std::optional<SignClass> sign;
  std::optional<Integer> middle_betti;
  std::optional<SphereVerdict::Kind> sphere;
  std::optional<std::size_t> nvars;

  bool matches(const InvariantRecord& rec) const;
};

struct CorruptLineReport {
  std::size_t line;
  std::string message;
};

struct AppendReport {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::vector<CorruptLineReport> corrupt;
};

struct QueryReport {
  std::vector<InvariantRecord> records;
  std::vector<CorruptLineReport> corrupt;
};

/// Append-only JSON Lines file keyed by canonical link key. Writes through
/// one Catalog object are serialized.
class Catalog {
 public:
  explicit Catalog(std::string path) : path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

  /// Skips records whose key is already present (in the file or earlier in
  /// `records`). Stamps empty timestamps with the current UTC time.
  AppendReport append(std::vector<InvariantRecord> records);

  /// A missing file is an empty catalog.
  QueryReport query(const CatalogFilter& filter) const;

 private:
  std::string path_;
  mutable std::mutex write_mutex_;
};

std::string utc_timestamp();

}  // namespace atlas
