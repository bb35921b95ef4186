#pragma once

#include <atlas/links.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

/// A link given by Brieskorn-Pham exponents, explicit weights, or a monomial
/// exponent matrix, with its derived weight system.
struct LinkDescriptor {
  std::optional<BPExponents> exponents;
  std::optional<MonomialMatrix> monomials;
  WeightSystem weights;

  /// Sorted exponents for BP links, canonical weights otherwise.
  std::string key() const;
  std::size_t dimension() const { return weights.link_dimension(); }
};

/// Accepts `bp:5,3,2`, `w:13,43,101,158@316` and
/// `mono:[21,1,0,0;0,5,1,0;1,0,3,0;0,0,0,2]`. Throws InvalidInput.
LinkDescriptor parse_link(std::string_view text);

/// Comma-separated integers, e.g. "3,5,7".
std::vector<Integer> parse_integer_list(std::string_view text);

/// Inclusive range "lo..hi" or a single integer.
std::pair<long, long> parse_range(std::string_view text);

}  // namespace atlas
