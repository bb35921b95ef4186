#pragma once

#include <atlas/links.hpp>

#include <optional>
#include <string>
#include <vector>

namespace atlas {

/// Signature of the Milnor fiber V(a) bounded by a Brieskorn-Pham link,
/// counted over the lattice box 0 < i_j < a_j by where sum i_j/a_j falls
/// modulo 2: (0,1) counts positive, (1,2) negative, integers neither.
struct SignatureResult {
  Integer signature;
  Integer positive_count;
  Integer negative_count;
  Integer boundary_count;  // tuples whose sum is an integer
};

/// Histogram-convolution lattice count. Supported for 3 and 5 exponents
/// (3- and 7-dimensional links); throws DimensionUnsupported otherwise.
SignatureResult brieskorn_signature(const BPExponents& a);

/// Elementary steps `brieskorn_signature` performs on `a`.
Integer signature_cost(const BPExponents& a);

bool pairwise_coprime(const std::vector<Integer>& xs);

/// Casson invariant sig V / 8 of a Brieskorn integral homology 3-sphere.
/// Throws NotPairwiseCoprime, DimensionUnsupported or NonDivisible.
Integer casson(const BPExponents& a);

/// L(a_0, a_1, a_2) is an integral homology sphere iff the exponents are
/// pairwise coprime.
bool dim3_homology_sphere(const BPExponents& a);

struct SphereVerdict {
  enum class Kind {
    StandardSphere,
    KervaireSphere,
    HomologySphere,
    RationalHomologySphere,
    NotASphere,
    Undetermined,
  } kind;
  std::optional<int> bp8_residue;  // 0..27, 7-dimensional rational spheres only

  friend bool operator==(const SphereVerdict&, const SphereVerdict&) = default;
};

std::string to_string(SphereVerdict::Kind kind);
std::optional<SphereVerdict::Kind> sphere_kind_from_string(const std::string& text);

struct KervaireResult {
  SphereVerdict verdict;
  SignClass sign;
};

/// The (4m+1)-dimensional link L(2, 2r_1, ..., 2r_{2m}, a) for pairwise
/// coprime r_i: standard sphere for a = +-1 mod 8, Kervaire sphere for
/// a = +-3 mod 8, undetermined for even a.
KervaireResult kervaire_classify(const std::vector<Integer>& r, const Integer& a);

/// (sig V / 8) mod 28 for a 7-dimensional rational homology sphere link.
/// Throws NotASphere if b_3 != 0 and NonDivisible if 8 does not divide sig V.
SphereVerdict bp8_class(const BPExponents& a);

/// Best verdict available for a Brieskorn-Pham link.
SphereVerdict sphere_verdict(const BPExponents& a);

/// Verdict for a general weight system: only the Betti test applies.
SphereVerdict sphere_verdict(const WeightSystem& ws);

}  // namespace atlas
