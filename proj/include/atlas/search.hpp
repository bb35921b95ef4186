#pragma once

#include <atlas/catalog.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atlas {

enum class Family {
  BPBox,         // one range per exponent
  Family237m,    // (2, 3, 7, m)
  FamilyKKK1P,   // (k, k, k+1, p)
  FamilyKKKK1P,  // (k, k, k, k+1, p)
  FamilyPQRpqr,  // (p, q, r, pqr)
  FamilyKervaire // (2, 2r_1, ..., 2r_{2m}, a); ranges for r_1..r_{2m}, then a
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& text);

/// Conjunction of conditions on a link of the family.
struct Predicate {
  std::optional<SignClass> sign;
  std::optional<Integer> middle_betti;
  bool rational_sphere = false;
  bool pairwise_coprime = false;
  /// The last exponent is coprime to at least this many of the others.
  std::optional<long> min_coprime;

  bool matches(const BPExponents& a, const InvariantRecord& rec) const;
};

/// Parses "sign=negative,betti=20,rational_sphere,pairwise_coprime,min_coprime=2".
Predicate parse_predicate(const std::string& text);

struct SearchSpec {
  Family family;
  std::vector<std::pair<long, long>> bounds;  // inclusive
  Predicate predicate;
};

struct SearchResult {
  std::vector<InvariantRecord> records;  // matches, sorted by key
  std::size_t enumerated = 0;            // distinct links in the family
  std::map<std::string, std::size_t> sign_counts;  // over matches
  std::vector<std::string> notes;
};

/// Family members as exponent vectors, deduplicated by canonical key, in
/// key order. Throws InvalidInput on malformed bounds.
std::vector<BPExponents> enumerate_family(const SearchSpec& spec);

/// Estimated elementary steps: 2^nvars per Betti sum plus the convolution
/// cost of each signature.
Integer estimate_cost(const std::vector<BPExponents>& members);

/// Throws BoundsTooLarge when the estimate exceeds `budget`; never truncates.
SearchResult run_search(const SearchSpec& spec, const Integer& budget, unsigned threads = 1);

struct SweepResult {
  std::map<int, BPExponents> witnesses;  // bP8 residue -> first (k, p) realizing it
  std::size_t links_examined = 0;
  std::size_t distinct() const { return witnesses.size(); }
};

/// bP8 residues of L(k,k,k,k+1,p) for 2 <= k <= k_max, 2 <= p <= p_max with
/// p prime to k and k+1 and middle Betti number 0.
SweepResult seven_sphere_sweep(long k_max, long p_max, const Integer& budget, unsigned threads = 1);

}  // namespace atlas
