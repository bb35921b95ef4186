#include <atlas/error.hpp>
#include <atlas/eta_einstein.hpp>

#include <doctest.h>

#include <random>

using namespace atlas;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an atlas::Error");
  return ErrorKind::InvalidInput;
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

struct RandomConstants {
  std::mt19937 rng{42};
  std::uniform_int_distribution<long> nd{1, 6}, num{-60, 60}, den{1, 12}, pos{1, 40};

  EtaConstants constants() { return EtaConstants(nd(rng), q(num(rng), den(rng))); }
  HomothetyScale scale() { return HomothetyScale(q(pos(rng), den(rng))); }
};

}  // namespace

TEST_CASE("constants keep lambda + nu = 2n") {
  const EtaConstants c(2, q(5));
  CHECK(c.nu() == -1);
  CHECK(kind_of([] { EtaConstants(1, q(2), q(1)); }) == ErrorKind::InvalidInput);
  CHECK(EtaConstants(1, q(-2), q(4)).sign() == SignClass::Null);
  CHECK(EtaConstants(1, q(-5, 2)).sign() == SignClass::Negative);
  CHECK(EtaConstants(1, q(-3, 2)).sign() == SignClass::Positive);
}

TEST_CASE("homothety") {
  CHECK(homothety(EtaConstants(1, q(2), q(0)), HomothetyScale(q(1, 2))) == EtaConstants(1, q(6), q(-4)));
  const EtaConstants c(3, q(7, 3));
  CHECK(homothety(c, HomothetyScale(q(1))) == c);
  for (long a = 1; a <= 9; ++a)
    CHECK(homothety(EtaConstants(2, q(-2), q(6)), HomothetyScale(q(a, 3))) == EtaConstants(2, q(-2), q(6)));
  CHECK(kind_of([] { HomothetyScale(q(0)); }) == ErrorKind::NonPositiveScale);
  CHECK(kind_of([] { HomothetyScale(q(-1, 2)); }) == ErrorKind::NonPositiveScale);
}

TEST_CASE("property: homothety is a group action preserving sign and lambda + nu") {
  RandomConstants gen;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = gen.constants();
    const auto a = gen.scale();
    const auto b = gen.scale();
    const auto ca = homothety(c, a);
    CHECK(homothety(ca, b) == homothety(c, HomothetyScale(Rational(a.value() * b.value()))));
    CHECK(ca.lambda() + ca.nu() == 2 * c.n());
    CHECK(ca.sign() == c.sign());
    CHECK(homothety(ca, HomothetyScale(Rational(1 / a.value()))) == c);
  }
}

TEST_CASE("property: homothety matches the transformed Ricci tensor") {
  // Ric' = Ric - 2(a-1) g + (a-1)(2n+2+2na) eta(x)eta, re-expressed in the
  // new basis g' = a g + a(a-1) eta(x)eta, eta' = a eta.
  RandomConstants gen;
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = gen.constants();
    const Rational a = gen.scale().value();
    const long n = c.n();
    const Rational g_coeff = c.lambda() - 2 * (a - 1);
    const Rational ee_coeff = c.nu() + (a - 1) * (2 * n + 2 + 2 * n * a);
    const Rational lambda_new = g_coeff / a;
    const Rational nu_new = (ee_coeff - lambda_new * a * (a - 1)) / (a * a);
    const auto t = homothety(c, HomothetyScale(a));
    CHECK(t.lambda() == lambda_new);
    CHECK(t.nu() == nu_new);
  }
}

TEST_CASE("einstein_scale") {
  CHECK(einstein_scale(EtaConstants(1, q(6), q(-4))).value() == 2);
  CHECK(einstein_scale(EtaConstants(2, q(4), q(0))).value() == 1);
  CHECK(kind_of([] { einstein_scale(EtaConstants(1, q(-2), q(4))); }) == ErrorKind::NotPositiveClass);

  RandomConstants gen;
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = gen.constants();
    if (c.sign() != SignClass::Positive) continue;
    const auto e = homothety(c, einstein_scale(c));
    CHECK(e.lambda() == 2 * c.n());
    CHECK(e.nu() == 0);
  }
}

TEST_CASE("lorentzian_scale") {
  CHECK(lorentzian_scale(EtaConstants(2, q(-8), q(12))).a == -1);
  CHECK(lorentzian_scale(EtaConstants(3, q(-10), q(16))).a == -1);
  CHECK(kind_of([] { lorentzian_scale(EtaConstants(1, q(-2), q(4))); }) == ErrorKind::NotNegativeClass);
  for (long n = 1; n <= 5; ++n)
    for (long t = 1; t <= 7; ++t) {
      const Rational tt = q(t, 3);
      const EtaConstants c(n, Rational(-2 - (2 * n + 2) * tt));
      CHECK(lorentzian_scale(c).a == -tt);
    }
}

TEST_CASE("squash_class") {
  CHECK(squash_class(HomothetyScale(q(1, 2))) == SquashClass::Squashed);
  CHECK(squash_class(HomothetyScale(q(1))) == SquashClass::Einstein);
  CHECK(squash_class(HomothetyScale(q(3))) == SquashClass::Stretched);
  for (long n = 1; n <= 4; ++n) {
    const auto t = homothety(EtaConstants(n, q(2 * n)), HomothetyScale(q(2, 3)));
    CHECK(t.lambda() > 2 * n);
    CHECK(t.nu() < 0);
  }
}

TEST_CASE("scalar curvature and scalar-flat scale") {
  CHECK(scalar_curvature(EtaConstants(1, q(-2), q(4))) == -2);
  CHECK(scalar_curvature(EtaConstants(2, q(4), q(0))) == 20);
  CHECK(scalar_curvature(EtaConstants(3, q(-1))) == 0);
  CHECK(scalar_flat_scale(EtaConstants(1, q(2), q(0))).value() == 4);
  CHECK(scalar_flat_scale(EtaConstants(2, q(4), q(0))).value() == 6);
  CHECK(scalar_flat_scale(EtaConstants(2, q(-1))).value() == 1);
  CHECK(kind_of([] { scalar_flat_scale(EtaConstants(2, q(-3))); }) == ErrorKind::NotPositiveClass);
  for (long n = 1; n <= 4; ++n) {
    const EtaConstants c(n, q(5, 2));
    const auto flat = homothety(c, scalar_flat_scale(c));
    CHECK(flat.lambda() == -1);
    CHECK(scalar_curvature(flat) == 0);
  }
}

TEST_CASE("ew_mu") {
  const auto berger = ew_mu(EtaConstants(1, q(6), q(-4)));
  CHECK(berger.mu_squared == 4);
  CHECK_FALSE(berger.needs_sqrt);
  const auto other = ew_mu(EtaConstants(2, q(5), q(-1)));
  CHECK(other.mu_squared == q(1, 3));
  CHECK(other.needs_sqrt);
  CHECK(kind_of([] { ew_mu(EtaConstants(1, q(-2), q(4))); }) == ErrorKind::NoEWPair);
  CHECK(kind_of([] { ew_mu(EtaConstants(2, q(4), q(0))); }) == ErrorKind::NoEWPair);
}

TEST_CASE("heisenberg_alpha") {
  CHECK(heisenberg_alpha(1) == 4);
  CHECK(heisenberg_alpha(2) == 2);
  CHECK(heisenberg_alpha(3) == q(8, 5));
  CHECK(kind_of([] { heisenberg_alpha(0); }) == ErrorKind::InvalidInput);
}
