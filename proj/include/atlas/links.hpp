#pragma once

#include <atlas/numeric.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

/// Weights and degree of a weighted homogeneous polynomial in `nvars()`
/// variables. Canonical form: weights primitive (gcd 1) and sorted ascending.
/// The link of such a polynomial has dimension 2 * nvars() - 3.
class WeightSystem {
 public:
  /// Normalizes by the overall gcd of weights and degree, then sorts.
  /// Throws InvalidInput if any weight or the degree is not positive, or if
  /// fewer than two weights are given.
  WeightSystem(std::vector<Integer> weights, Integer degree);

  const std::vector<Integer>& weights() const noexcept { return weights_; }
  const Integer& degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return weights_.size(); }
  std::size_t link_dimension() const noexcept { return 2 * nvars() - 3; }

  /// |w| = sum of the weights.
  Integer weight_sum() const;

  /// "w:1,1,4,6@12"
  std::string key() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<Integer> weights_;
  Integer degree_;
};

/// Exponents of a Brieskorn-Pham polynomial z_0^{a_0} + ... + z_n^{a_n}.
class BPExponents {
 public:
  /// Throws DegenerateExponent if any a_i < 2, InvalidInput if fewer than two.
  explicit BPExponents(std::vector<Integer> exponents);
  BPExponents(std::initializer_list<long> exponents);

  const std::vector<Integer>& values() const noexcept { return exponents_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const Integer& operator[](std::size_t i) const { return exponents_[i]; }

  /// Sorted copy; permutations give isomorphic links.
  BPExponents sorted() const;

  /// "bp:2,3,5" on the sorted exponents.
  std::string key() const;

  friend bool operator==(const BPExponents&, const BPExponents&) = default;

 private:
  std::vector<Integer> exponents_;
};

enum class SignClass { Positive, Null, Negative };

std::string to_string(SignClass s);

/// Rows are exponent vectors of the monomials of a polynomial.
class MonomialMatrix {
 public:
  /// Throws InvalidInput on an empty matrix, ragged rows or negative entries.
  explicit MonomialMatrix(std::vector<std::vector<Integer>> rows);

  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }
  std::size_t nvars() const noexcept { return rows_.front().size(); }

  /// The diagonal matrix of z_i^{a_i}.
  static MonomialMatrix brieskorn_pham(const BPExponents& a);

 private:
  std::vector<std::vector<Integer>> rows_;
};

WeightSystem bp_link(const BPExponents& a);

/// Sign of d - |w|: Positive when negative, Negative when positive.
SignClass classify_sign(const WeightSystem& ws);

/// Exact sign of 1 - sum 1/a_i, the reciprocal-sum form of `classify_sign`.
SignClass classify_sign(const BPExponents& a);

/// Solves sum_j m_ij w_j = d for every row over the rationals. Returns the
/// primitive positive solution. If `required_degree` is given, the solution
/// must scale to integral weights at exactly that degree.
/// Throws RankDeficient or NoPositiveSolution.
WeightSystem solve_weights(const MonomialMatrix& m,
                           const std::optional<Integer>& required_degree = std::nullopt);

/// Number of monomials of weighted degree d.
Integer count_monomials(const WeightSystem& ws);

/// Every triple of weights has gcd 1. Only defined for four variables.
bool is_well_formed(const WeightSystem& ws);

enum class Pi1Class { Finite, InfiniteNilpotent, Infinite };

std::string to_string(Pi1Class c);

/// Fundamental group type of a 3-dimensional link (three variables).
Pi1Class pi1_class(const WeightSystem& ws);

struct AdeLabel {
  enum class Family { A, D, E } family;
  long index;  // A_{p-1}: p-1, D_m: m, E: 6/7/8

  std::string to_string() const;
  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

/// Matches a positive 3-variable weight system against the spherical
/// space form table (cyclic, binary dihedral, tetrahedral, octahedral,
/// icosahedral). Returns nullopt when nothing matches.
std::optional<AdeLabel> ade_match(const WeightSystem& ws);

}  // namespace atlas
