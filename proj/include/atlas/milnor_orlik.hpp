#pragma once

#include <atlas/links.hpp>

#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct BettiResult {
  Integer middle_betti;              // b_{n-1} of the (2n-1)-dimensional link
  std::size_t link_dim;
  std::vector<Rational> reduced_quotients;  // d / w_i in lowest terms
};

/// Middle Betti number from the alternating sum over all subsets of the
/// reduced quotients u_i/v_i = d/w_i. The empty subset contributes
/// (-1)^{nvars}. Throws NonIntegerResult if the exact sum is not an integer.
BettiResult betti(const WeightSystem& ws);

bool is_rational_homology_sphere(const WeightSystem& ws);

/// Closed-form torsion of H_{n-1}, returned only where it is known.
struct TorsionInfo {
  enum class Kind { TorsionFree, CyclicPair, Unknown } kind;
  Integer order;  // k for Z_k + Z_k, else 0

  std::string to_string() const;
  friend bool operator==(const TorsionInfo&, const TorsionInfo&) = default;
};

/// (3,3,3,k) with k prime to 3 gives Z_k + Z_k; a well-formed 4-variable
/// weight system is torsion free; everything else is Unknown.
TorsionInfo torsion_closed_form(const BPExponents& a);

}  // namespace atlas
