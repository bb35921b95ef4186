#include <atlas/error.hpp>
#include <atlas/milnor_orlik.hpp>
#include <atlas/spheres.hpp>

#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace atlas;

namespace {

BPExponents bp(const std::vector<long>& a) { return BPExponents(std::vector<Integer>(a.begin(), a.end())); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an atlas::Error");
  return ErrorKind::InvalidInput;
}

void check_against_oracle(const std::vector<long>& a) {
  CAPTURE(bp(a).key());
  const auto fast = brieskorn_signature(bp(a));
  const auto slow = oracle::nested_loop_signature(a);
  CHECK(fast.positive_count == slow.positive);
  CHECK(fast.negative_count == slow.negative);
  CHECK(fast.boundary_count == slow.boundary);
  CHECK(fast.signature == slow.signature());
}

}  // namespace

TEST_CASE("signature of V(6k-1,3,2) is -8k") {
  for (long k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(brieskorn_signature({6 * k - 1, 3, 2}).signature == -8 * k);
  }
  CHECK(brieskorn_signature({7, 3, 2}).signature == -8);
}

TEST_CASE("frozen regression: sig V(2,2,2,3,5) from the nested-loop oracle") {
  // value computed with oracle::nested_loop_signature before the fast path existed
  CHECK(oracle::nested_loop_signature({2, 2, 2, 3, 5}).signature() == 8);
  CHECK(brieskorn_signature({2, 2, 2, 3, 5}).signature == 8);
  CHECK(bp8_class({2, 2, 2, 3, 5}).bp8_residue == 1);
}

TEST_CASE("histogram convolution agrees with the nested loop") {
  SUBCASE("all triples with entries <= 12") {
    for (long p = 2; p <= 12; ++p)
      for (long q = p; q <= 12; ++q)
        for (long r = q; r <= 12; ++r) check_against_oracle({p, q, r});
  }
  SUBCASE("random 3- and 5-tuples with box size <= 1e5") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> e5(2, 9), e3(2, 60);
    int done = 0;
    while (done < 60) {
      std::vector<long> a;
      const bool five = done % 2;
      for (int i = 0; i < (five ? 5 : 3); ++i) a.push_back(five ? e5(rng) : e3(rng));
      long box = 1;
      for (long x : a) box *= x - 1;
      if (box > 100000) continue;
      check_against_oracle(a);
      ++done;
    }
  }
}

TEST_CASE("property: the lattice box is partitioned; counts bounded by the box") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> e(2, 25);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> a{e(rng), e(rng), e(rng)};
    const auto s = brieskorn_signature(bp(a));
    const Integer box = Integer(a[0] - 1) * (a[1] - 1) * (a[2] - 1);
    CHECK(s.positive_count + s.negative_count + s.boundary_count == box);
    CHECK(abs(s.signature) <= box);
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(brieskorn_signature(bp(a)).signature == s.signature);
  }
}

TEST_CASE("property: pairwise coprime triples have signature divisible by 8") {
  for (long p = 2; p <= 12; ++p)
    for (long q = p + 1; q <= 12; ++q)
      for (long r = q + 1; r <= 12; ++r) {
        if (!pairwise_coprime({p, q, r})) continue;
        CHECK(brieskorn_signature({p, q, r}).signature % 8 == 0);
      }
}

TEST_CASE("signature dimensions") {
  CHECK(kind_of([] { brieskorn_signature({2, 3, 7, 42}); }) == ErrorKind::DimensionUnsupported);
  CHECK(kind_of([] { brieskorn_signature({2, 3}); }) == ErrorKind::DimensionUnsupported);
}

TEST_CASE("signature cost model is a modest upper bound on work") {
  CHECK(signature_cost({2, 3, 5}) == 2 * 1 + 2 * 2 * 2 + 2 * 6 * 4);
  // large last exponent stays linear in it
  CHECK(signature_cost({8, 8, 8, 9, 599}) < 200'000);
}

TEST_CASE("casson") {
  for (long k = 1; k <= 5; ++k) CHECK(casson({6 * k - 1, 3, 2}) == -k);
  CHECK(casson({7, 3, 2}) == -1);
  CHECK(kind_of([] { casson({6, 10, 15}); }) == ErrorKind::NotPairwiseCoprime);
  CHECK(kind_of([] { casson({2, 3, 5, 7}); }) == ErrorKind::DimensionUnsupported);
}

TEST_CASE("dim3_homology_sphere") {
  CHECK(dim3_homology_sphere({5, 3, 2}));
  CHECK_FALSE(dim3_homology_sphere({6, 10, 15}));
  CHECK(dim3_homology_sphere({7, 3, 2}));
  CHECK(kind_of([] { dim3_homology_sphere({2, 3, 5, 7}); }) == ErrorKind::DimensionUnsupported);
}

TEST_CASE("kervaire_classify") {
  using K = SphereVerdict::Kind;
  const std::vector<Integer> r{3, 5};
  CHECK(kervaire_classify(r, 7).verdict.kind == K::StandardSphere);
  CHECK(kervaire_classify(r, 9).verdict.kind == K::StandardSphere);
  CHECK(kervaire_classify(r, 11).verdict.kind == K::KervaireSphere);
  CHECK(kervaire_classify(r, 5).verdict.kind == K::KervaireSphere);
  CHECK(kervaire_classify(r, 4).verdict.kind == K::Undetermined);
  CHECK(kind_of([] { kervaire_classify({3, 6}, 7); }) == ErrorKind::NotPairwiseCoprime);
  CHECK(kind_of([] { kervaire_classify({3, 5, 7}, 7); }) == ErrorKind::InvalidInput);

  // sum 1/r_i < (a-2)/a agrees with the sign of the link L(2, 2r_1, 2r_2, a)
  for (long r1 = 1; r1 <= 9; ++r1)
    for (long r2 = r1; r2 <= 9; ++r2)
      for (long a = 3; a <= 25; ++a) {
        if (std::gcd(r1, r2) != 1) continue;
        const auto res = kervaire_classify({r1, r2}, a);
        CHECK(res.sign == classify_sign(bp_link({2, 2 * r1, 2 * r2, a})));
      }
  CHECK(kervaire_classify(r, 7).sign == SignClass::Negative);
}

TEST_CASE("bp8_class") {
  using K = SphereVerdict::Kind;
  const auto v = bp8_class({4, 4, 4, 5, 3});
  CHECK(v.kind == K::RationalHomologySphere);
  REQUIRE(v.bp8_residue.has_value());
  CHECK(*v.bp8_residue >= 0);
  CHECK(*v.bp8_residue < 28);
  CHECK(bp8_class({3, 4, 4, 5, 4}).bp8_residue == v.bp8_residue);
  CHECK(bp8_class({5, 3, 2, 2, 2}).bp8_residue == 1);
  CHECK(kind_of([] { bp8_class({3, 3, 3, 3, 3}); }) == ErrorKind::NotASphere);
  // the quadric link has b_3 = 0 but sig V = 1
  CHECK(kind_of([] { bp8_class({2, 2, 2, 2, 2}); }) == ErrorKind::NonDivisible);
  CHECK(kind_of([] { bp8_class({2, 3, 5}); }) == ErrorKind::DimensionUnsupported);
}

TEST_CASE("sphere_verdict dispatch") {
  using K = SphereVerdict::Kind;
  CHECK(sphere_verdict(BPExponents{5, 3, 2}).kind == K::HomologySphere);
  CHECK(sphere_verdict(BPExponents{4, 4, 4, 4}).kind == K::NotASphere);
  CHECK(sphere_verdict(BPExponents{2, 6, 10, 7}).kind == K::StandardSphere);
  CHECK(sphere_verdict(BPExponents{2, 6, 10, 11}).kind == K::KervaireSphere);
  CHECK(sphere_verdict(BPExponents{3, 3, 3, 4}).kind == K::RationalHomologySphere);
  CHECK(sphere_verdict(BPExponents{2, 2, 2, 3, 5}).bp8_residue == 1);
}
