#include <atlas/error.hpp>
#include <atlas/search.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace atlas {

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::size_t expected_ranges(Family f, std::size_t given) {
  switch (f) {
    case Family::BPBox: return std::max<std::size_t>(given, 2);
    case Family::Family237m: return 1;
    case Family::FamilyKKK1P: return 2;
    case Family::FamilyKKKK1P: return 2;
    case Family::FamilyPQRpqr: return 3;
    case Family::FamilyKervaire:
      return given >= 3 && given % 2 == 1 ? given : 3;
  }
  return given;
}

long min_parameter(Family f, std::size_t index, std::size_t nranges) {
  // r_i may be 1 since the exponent is 2 r_i
  if (f == Family::FamilyKervaire && index + 1 < nranges) return 1;
  return 2;
}

std::vector<Integer> members_of(Family f, const std::vector<long>& v) {
  auto z = [](long x) { return Integer(x); };
  switch (f) {
    case Family::BPBox: {
      std::vector<Integer> out;
      for (long x : v) out.push_back(z(x));
      return out;
    }
    case Family::Family237m: return {2, 3, 7, z(v[0])};
    case Family::FamilyKKK1P: return {z(v[0]), z(v[0]), z(v[0] + 1), z(v[1])};
    case Family::FamilyKKKK1P: return {z(v[0]), z(v[0]), z(v[0]), z(v[0] + 1), z(v[1])};
    case Family::FamilyPQRpqr: {
      const Integer p = v[0], q = v[1], r = v[2];
      return {p, q, r, p * q * r};
    }
    case Family::FamilyKervaire: {
      std::vector<Integer> out{2};
      for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(2 * z(v[i]));
      out.push_back(z(v.back()));
      return out;
    }
  }
  return {};
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::BPBox: return "box";
    case Family::Family237m: return "237m";
    case Family::FamilyKKK1P: return "kkk1p";
    case Family::FamilyKKKK1P: return "kkkk1p";
    case Family::FamilyPQRpqr: return "pqr";
    case Family::FamilyKervaire: return "kervaire";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& text) {
  for (Family f : {Family::BPBox, Family::Family237m, Family::FamilyKKK1P, Family::FamilyKKKK1P,
                   Family::FamilyPQRpqr, Family::FamilyKervaire}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

bool Predicate::matches(const BPExponents& a, const InvariantRecord& rec) const {
  if (sign && rec.sign != *sign) return false;
  if (middle_betti && rec.middle_betti != *middle_betti) return false;
  if (rational_sphere && rec.middle_betti != 0) return false;
  if (pairwise_coprime && !atlas::pairwise_coprime(a.values())) return false;
  if (min_coprime) {
    const auto& v = a.values();
    long coprime = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (gcd(v[i], v.back()) == 1) ++coprime;
    if (coprime < *min_coprime) return false;
  }
  return true;
}

Predicate parse_predicate(const std::string& text) {
  Predicate p;
  std::stringstream in(text);
  std::string term;
  while (std::getline(in, term, ',')) {
    if (term.empty()) continue;
    const auto eq = term.find('=');
    const auto name = term.substr(0, eq);
    const auto value = eq == std::string::npos ? std::string() : term.substr(eq + 1);
    try {
      if (name == "sign") {
        if (value == "positive") p.sign = SignClass::Positive;
        else if (value == "null") p.sign = SignClass::Null;
        else if (value == "negative") p.sign = SignClass::Negative;
        else throw std::invalid_argument(value);
      } else if (name == "betti") {
        p.middle_betti = Integer(value);
      } else if (name == "rational_sphere" && value.empty()) {
        p.rational_sphere = true;
      } else if (name == "pairwise_coprime" && value.empty()) {
        p.pairwise_coprime = true;
      } else if (name == "min_coprime") {
        p.min_coprime = std::stol(value);
      } else {
        throw std::invalid_argument(name);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad predicate term '" + term + "'");
    }
  }
  return p;
}

std::vector<BPExponents> enumerate_family(const SearchSpec& spec) {
  const auto n = spec.bounds.size();
  if (n == 0 || expected_ranges(spec.family, n) != n) {
    throw Error(ErrorKind::InvalidInput, "family " + to_string(spec.family) + " does not take " +
                                             std::to_string(n) + " ranges");
  }
  Integer size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [lo, hi] = spec.bounds[i];
    if (lo > hi) throw Error(ErrorKind::InvalidInput, "empty range");
    if (lo < min_parameter(spec.family, i, n)) {
      throw Error(ErrorKind::InvalidInput,
                  "range " + std::to_string(i) + " starts below " +
                      std::to_string(min_parameter(spec.family, i, n)));
    }
    size *= Integer(hi) - lo + 1;
  }
  if (size > 50'000'000)
    throw Error(ErrorKind::BoundsTooLarge, "family has " + size.get_str() + " members");

  std::map<std::vector<Integer>, BPExponents> unique;
  std::vector<long> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = spec.bounds[i].first;
  auto advance = [&] {
    for (std::size_t i = n; i-- > 0;) {
      if (v[i] < spec.bounds[i].second) {
        ++v[i];
        return true;
      }
      v[i] = spec.bounds[i].first;
    }
    return false;
  };
  do {
    BPExponents a(members_of(spec.family, v));
    unique.try_emplace(a.sorted().values(), std::move(a));
  } while (advance());

  std::vector<BPExponents> out;
  out.reserve(unique.size());
  for (auto& [key, a] : unique) out.push_back(std::move(a));
  return out;
}

Integer estimate_cost(const std::vector<BPExponents>& members) {
  Integer cost = 0;
  for (const auto& a : members) {
    cost += Integer(1) << static_cast<unsigned>(std::min<std::size_t>(a.size(), 62));
    if (a.size() == 3 || a.size() == 5) cost += signature_cost(a);
  }
  return cost;
}

namespace {

void require_budget(const Integer& cost, const Integer& budget) {
  if (cost > budget) {
    throw Error(ErrorKind::BoundsTooLarge, "estimated cost " + cost.get_str() +
                                               " exceeds budget " + budget.get_str());
  }
}

}  // namespace

SearchResult run_search(const SearchSpec& spec, const Integer& budget, unsigned threads) {
  const auto members = enumerate_family(spec);
  require_budget(estimate_cost(members), budget);

  std::vector<InvariantRecord> records(members.size());
  std::vector<char> hit(members.size(), 0);
  parallel_for(members.size(), threads, [&](std::size_t i) {
    const auto& a = members[i];
    LinkDescriptor link{a, std::nullopt, bp_link(a)};
    records[i] = compute_record(link);
    hit[i] = spec.predicate.matches(a, records[i]);
  });

  SearchResult result;
  result.enumerated = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!hit[i]) continue;
    ++result.sign_counts[to_string(records[i].sign)];
    result.records.push_back(std::move(records[i]));
  }

  if (spec.family == Family::Family237m && spec.bounds.front() == std::pair{5L, 41L} &&
      spec.predicate.min_coprime == 2) {
    result.notes.push_back("published count for (2,3,7,m), 5 <= m <= 41, m prime to two of "
                           "2,3,7 is 27; exhaustive count here is " +
                           std::to_string(result.records.size()));
  }
  return result;
}

SweepResult seven_sphere_sweep(long k_max, long p_max, const Integer& budget, unsigned threads) {
  if (k_max < 2 || p_max < 2) throw Error(ErrorKind::InvalidInput, "sweep bounds must be at least 2");
  std::vector<BPExponents> members;
  for (long k = 2; k <= k_max; ++k)
    for (long p = 2; p <= p_max; ++p)
      if (std::gcd(p, k) == 1 && std::gcd(p, k + 1) == 1) members.push_back({k, k, k, k + 1, p});
  require_budget(estimate_cost(members), budget);

  std::vector<std::optional<int>> residue(members.size());
  parallel_for(members.size(), threads, [&](std::size_t i) {
    if (!is_rational_homology_sphere(bp_link(members[i]))) return;
    residue[i] = bp8_class(members[i]).bp8_residue;
  });

  SweepResult out;
  out.links_examined = members.size();
  for (std::size_t i = 0; i < members.size(); ++i)
    if (residue[i]) out.witnesses.try_emplace(*residue[i], members[i]);
  return out;
}

}  // namespace atlas
