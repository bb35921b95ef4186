#include <atlas/error.hpp>
#include <atlas/milnor_orlik.hpp>
#include <atlas/spheres.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace atlas;

namespace {

WeightSystem ws(std::initializer_list<long> w, long d) {
  return WeightSystem(std::vector<Integer>(w.begin(), w.end()), d);
}

Integer b(const WeightSystem& w) { return betti(w).middle_betti; }

}  // namespace

TEST_CASE("betti: known 5-dimensional values") {
  CHECK(b(bp_link({4, 4, 4, 4})) == 21);
  CHECK(b(bp_link({6, 6, 6, 2})) == 21);
  CHECK(b(bp_link({2, 3, 12, 12})) == 20);
  CHECK(b(bp_link({2, 3, 11, 66})) == 20);
  CHECK(b(ws({13, 43, 101, 158}, 316)) == 1);
  CHECK(b(ws({11, 61, 85, 158}, 316)) == 1);
  CHECK(b(bp_link({5, 5, 6, 6})) == 20);
  CHECK(b(bp_link({4, 4, 5, 5})) == 12);
  CHECK(b(ws({2, 7, 11, 19}, 40)) == 7);
}

TEST_CASE("betti result carries reduced quotients") {
  const auto r = betti(bp_link({2, 3, 12, 12}));
  CHECK(r.link_dim == 5);
  REQUIRE(r.reduced_quotients.size() == 4);
  CHECK(r.reduced_quotients[0] == Rational(12));  // d / 1
  CHECK(r.reduced_quotients[2] == Rational(3));   // 12 / 4
  CHECK(r.reduced_quotients[3] == Rational(2));   // 12 / 6
  const auto r2 = betti(ws({13, 43, 101, 158}, 316));
  CHECK(r2.reduced_quotients[3] == Rational(2));
  CHECK(r2.reduced_quotients[0] == Rational(316, 13));
}

TEST_CASE("closed form: b(L(k,k,k+1,k+1)) = k(k-1)") {
  for (long k = 4; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(b(bp_link({k, k, k + 1, k + 1})) == k * (k - 1));
  }
}

TEST_CASE("closed form: b(L(p,q,r,pqr)) for pairwise coprime p<q<r<=13") {
  int checked = 0;
  for (long p = 2; p <= 13; ++p)
    for (long q = p + 1; q <= 13; ++q)
      for (long r = q + 1; r <= 13; ++r) {
        if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        const long expected = (p * q * r - p * q - p * r - q * r - 1) + p + q + r;
        CHECK(b(bp_link({p, q, r, p * q * r})) == expected);
        ++checked;
      }
  CHECK(checked > 50);
}

TEST_CASE("rational homology spheres") {
  CHECK(is_rational_homology_sphere(bp_link({3, 3, 3, 4})));
  CHECK_FALSE(is_rational_homology_sphere(bp_link({4, 4, 4, 4})));
  CHECK(is_rational_homology_sphere(bp_link({2, 3, 5})));
  for (long k : {4, 5, 7, 8, 10, 11})
    CHECK(is_rational_homology_sphere(bp_link({3, 3, 3, k})));
}

TEST_CASE("property: pairwise coprime 3-dimensional BP links have b_1 = 0") {
  for (long p = 2; p <= 20; ++p)
    for (long q = p; q <= 20; ++q)
      for (long r = q; r <= 20; ++r) {
        const BPExponents a{p, q, r};
        if (!dim3_homology_sphere(a)) continue;
        CHECK(b(bp_link(a)) == 0);
      }
}

TEST_CASE("property: betti is permutation invariant and always an integer") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> exp(2, 30);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> a;
    for (int i = 0; i < 3 + trial % 3; ++i) a.emplace_back(exp(rng));
    const auto w = bp_link(BPExponents(a));
    std::shuffle(a.begin(), a.end(), rng);
    CHECK_NOTHROW(betti(w));
    CHECK(b(bp_link(BPExponents(a))) == b(w));
  }
}

TEST_CASE("integrality is asserted, not rounded") {
  // (1,2,2)@3 admits no quasi-smooth polynomial; its subset sum is -1/2
  bool threw = false;
  try {
    betti(ws({1, 2, 2}, 3));
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::NonIntegerResult;
  }
  CHECK(threw);
}

TEST_CASE("torsion_closed_form") {
  const auto t = torsion_closed_form({3, 3, 3, 4});
  CHECK(t.kind == TorsionInfo::Kind::CyclicPair);
  CHECK(t.order == 4);
  CHECK(t.to_string() == "Z_4+Z_4");
  CHECK(torsion_closed_form({4, 3, 3, 3}).order == 4);
  CHECK(torsion_closed_form({3, 3, 3, 2}).order == 2);
  CHECK(torsion_closed_form({2, 3, 12, 12}).kind == TorsionInfo::Kind::TorsionFree);
  CHECK(torsion_closed_form({5, 7, 9, 11, 13}).kind == TorsionInfo::Kind::Unknown);
  CHECK(torsion_closed_form({3, 3, 3, 6}).kind == TorsionInfo::Kind::Unknown);
}
