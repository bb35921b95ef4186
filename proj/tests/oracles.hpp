#pragma once

// Brute-force references used only by tests. They share no code with the
// library's algorithms.

#include <atlas/numeric.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

struct SignatureCounts {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t boundary = 0;
  std::int64_t signature() const { return positive - negative; }
};

/// Visits every tuple 0 < i_j < a_j and places sum i_j / a_j mod 2 exactly.
inline SignatureCounts nested_loop_signature(const std::vector<long>& a) {
  long d = 1;
  for (long x : a) d = std::lcm(d, x);
  SignatureCounts out;
  std::vector<long> i(a.size(), 1);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long num) {
    if (j == a.size()) {
      const long t = num % (2 * d);
      if (t == 0 || t == d) ++out.boundary;
      else if (t < d) ++out.positive;
      else ++out.negative;
      return;
    }
    for (long x = 1; x < a[j]; ++x) rec(j + 1, num + x * (d / a[j]));
  };
  rec(0, 0);
  return out;
}

/// Counts exponent vectors m with sum m_j w_j = d by direct recursion.
inline long enumerate_monomials(const std::vector<long>& w, long d) {
  std::function<long(std::size_t, long)> rec = [&](std::size_t j, long left) -> long {
    if (j == w.size()) return left == 0 ? 1 : 0;
    long total = 0;
    for (long m = 0; m * w[j] <= left; ++m) total += rec(j + 1, left - m * w[j]);
    return total;
  };
  return rec(0, d);
}

}  // namespace oracle
