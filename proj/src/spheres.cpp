#include <atlas/error.hpp>
#include <atlas/milnor_orlik.hpp>
#include <atlas/spheres.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>

namespace atlas {

namespace {

// Largest histogram (entries) the convolution will allocate.
constexpr std::uint64_t kMaxHistogram = std::uint64_t{1} << 28;

void require_signature_dimension(const BPExponents& a) {
  if (a.size() != 3 && a.size() != 5) {
    throw Error(ErrorKind::DimensionUnsupported,
                "signature is implemented for 3 or 5 exponents, got " + std::to_string(a.size()));
  }
}

std::uint64_t as_u64(const Integer& z, const char* what) {
  if (!z.fits_ulong_p() || z.get_ui() > kMaxHistogram)
    throw Error(ErrorKind::BoundsTooLarge, std::string(what) + " too large: " + z.get_str());
  return z.get_ui();
}

template <class Count>
SignatureResult count_signature(const std::vector<std::uint64_t>& a) {
  // a is sorted; the last (largest) exponent is folded in without
  // materializing its histogram.
  std::uint64_t denom = 1;
  std::vector<Count> hist{Count(1)};  // sum numerators mod 2*denom
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    const Integer l = lcm(Integer(denom), Integer(a[j]));
    const std::uint64_t next = as_u64(l, "histogram denominator");
    const std::uint64_t scale = next / denom;
    const std::uint64_t step = next / a[j];
    const std::uint64_t mod = 2 * next;
    std::vector<Count> out(mod, Count(0));
    for (std::uint64_t s = 0; s < hist.size(); ++s) {
      if (hist[s] == 0) continue;
      const std::uint64_t base = s * scale;
      std::uint64_t t = base;
      for (std::uint64_t i = 1; i < a[j]; ++i) {
        t += step;
        if (t >= mod) t -= mod;
        out[t] += hist[s];
      }
    }
    hist = std::move(out);
    denom = next;
  }

  const std::uint64_t last = a.back();
  const std::uint64_t full = as_u64(lcm(Integer(denom), Integer(last)), "signature denominator");
  const std::uint64_t scale = full / denom;
  const std::uint64_t step = full / last;
  const std::uint64_t mod = 2 * full;
  Count pos(0), neg(0), edge(0);
  for (std::uint64_t s = 0; s < hist.size(); ++s) {
    if (hist[s] == 0) continue;
    std::uint64_t t = (s * scale) % mod;
    for (std::uint64_t i = 1; i < last; ++i) {
      t += step;
      if (t >= mod) t -= mod;
      if (t == 0 || t == full) edge += hist[s];
      else if (t < full) pos += hist[s];
      else neg += hist[s];
    }
  }

  SignatureResult r;
  r.positive_count = Integer(pos);
  r.negative_count = Integer(neg);
  r.boundary_count = Integer(edge);
  r.signature = r.positive_count - r.negative_count;
  return r;
}

}  // namespace

Integer signature_cost(const BPExponents& a) {
  const auto s = a.sorted();
  Integer denom = 1, cost = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    // Histogram size before this exponent times its a_j - 1 shifts.
    cost += 2 * denom * (s[j] - 1);
    if (j + 1 < s.size()) denom = lcm(denom, s[j]);
  }
  return cost;
}

SignatureResult brieskorn_signature(const BPExponents& a) {
  require_signature_dimension(a);
  const auto s = a.sorted();
  std::vector<std::uint64_t> exps;
  Integer box = 1;
  for (const auto& e : s.values()) {
    exps.push_back(as_u64(e, "exponent"));
    box *= e - 1;
  }
  if (box.fits_ulong_p() && box.get_ui() < (std::uint64_t{1} << 62))
    return count_signature<std::uint64_t>(exps);
  // Counts beyond 62 bits.
  return count_signature<Integer>(exps);
}

bool pairwise_coprime(const std::vector<Integer>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (gcd(xs[i], xs[j]) != 1) return false;
  return true;
}

bool dim3_homology_sphere(const BPExponents& a) {
  if (a.size() != 3) {
    throw Error(ErrorKind::DimensionUnsupported,
                "homology sphere criterion is for 3 exponents, got " + std::to_string(a.size()));
  }
  return pairwise_coprime(a.values());
}

Integer casson(const BPExponents& a) {
  if (!dim3_homology_sphere(a))
    throw Error(ErrorKind::NotPairwiseCoprime, a.key() + " is not an integral homology sphere");
  const Integer sig = brieskorn_signature(a).signature;
  if (sig % 8 != 0)
    throw Error(ErrorKind::NonDivisible, "signature " + sig.get_str() + " is not divisible by 8");
  return sig / 8;
}

std::string to_string(SphereVerdict::Kind kind) {
  using K = SphereVerdict::Kind;
  switch (kind) {
    case K::StandardSphere: return "standard_sphere";
    case K::KervaireSphere: return "kervaire_sphere";
    case K::HomologySphere: return "homology_sphere";
    case K::RationalHomologySphere: return "rational_homology_sphere";
    case K::NotASphere: return "not_a_sphere";
    case K::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::optional<SphereVerdict::Kind> sphere_kind_from_string(const std::string& text) {
  using K = SphereVerdict::Kind;
  for (K k : {K::StandardSphere, K::KervaireSphere, K::HomologySphere, K::RationalHomologySphere,
              K::NotASphere, K::Undetermined}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

KervaireResult kervaire_classify(const std::vector<Integer>& r, const Integer& a) {
  if (r.empty() || r.size() % 2 != 0) {
    throw Error(ErrorKind::InvalidInput,
                "need an even, nonzero number of r_i, got " + std::to_string(r.size()));
  }
  if (a < 2) throw Error(ErrorKind::DegenerateExponent, "a must be at least 2");
  for (const auto& ri : r)
    if (ri < 1) throw Error(ErrorKind::InvalidInput, "r_i must be positive");
  if (!pairwise_coprime(r)) throw Error(ErrorKind::NotPairwiseCoprime, "r_i not pairwise coprime");

  using K = SphereVerdict::Kind;
  KervaireResult out{{K::Undetermined, std::nullopt}, SignClass::Positive};
  if (a % 2 != 0) {
    const Integer res = a % 8;  // a > 0
    out.verdict.kind = (res == 1 || res == 7) ? K::StandardSphere : K::KervaireSphere;
  }

  // Negative iff sum 1/r_i < (a-2)/a.
  Rational sum = 0;
  for (const auto& ri : r) sum += Rational(1, ri);
  const int c = cmp(sum, make_rational(a - 2, a));
  out.sign = c < 0 ? SignClass::Negative : c == 0 ? SignClass::Null : SignClass::Positive;
  return out;
}

SphereVerdict bp8_class(const BPExponents& a) {
  if (a.size() != 5) {
    throw Error(ErrorKind::DimensionUnsupported,
                "bP8 residue needs 5 exponents, got " + std::to_string(a.size()));
  }
  if (!is_rational_homology_sphere(bp_link(a)))
    throw Error(ErrorKind::NotASphere, a.key() + " has nonzero middle Betti number");
  const Integer sig = brieskorn_signature(a).signature;
  if (sig % 8 != 0)
    throw Error(ErrorKind::NonDivisible, "signature " + sig.get_str() + " is not divisible by 8");
  Integer res = (sig / 8) % 28;
  if (res < 0) res += 28;
  return {SphereVerdict::Kind::RationalHomologySphere, static_cast<int>(res.get_si())};
}

namespace {

// Matches (2, 2r_1, ..., 2r_{2m}, a) with a odd; returns the r_i and a.
std::optional<std::pair<std::vector<Integer>, Integer>> kervaire_shape(const BPExponents& a) {
  std::vector<Integer> evens;
  std::optional<Integer> odd;
  const auto sorted = a.sorted();
  for (const auto& e : sorted.values()) {
    if (e % 2 != 0) {
      if (odd) return std::nullopt;
      odd = e;
    } else {
      evens.push_back(e);
    }
  }
  if (!odd || evens.empty() || evens.front() != 2) return std::nullopt;
  std::vector<Integer> r;
  for (std::size_t i = 1; i < evens.size(); ++i) r.push_back(evens[i] / 2);
  if (r.empty() || r.size() % 2 != 0 || !pairwise_coprime(r)) return std::nullopt;
  return std::pair{std::move(r), *odd};
}

}  // namespace

SphereVerdict sphere_verdict(const WeightSystem& ws) {
  using K = SphereVerdict::Kind;
  if (!is_rational_homology_sphere(ws)) return {K::NotASphere, std::nullopt};
  return {K::RationalHomologySphere, std::nullopt};
}

SphereVerdict sphere_verdict(const BPExponents& a) {
  using K = SphereVerdict::Kind;
  if (!is_rational_homology_sphere(bp_link(a))) return {K::NotASphere, std::nullopt};
  if (a.size() == 3 && dim3_homology_sphere(a)) return {K::HomologySphere, std::nullopt};
  if (auto shape = kervaire_shape(a)) return kervaire_classify(shape->first, shape->second).verdict;
  if (a.size() == 5) {
    try {
      return bp8_class(a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonDivisible) throw;
    }
  }
  return {K::RationalHomologySphere, std::nullopt};
}

}  // namespace atlas
