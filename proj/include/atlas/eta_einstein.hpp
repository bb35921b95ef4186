#pragma once

#include <atlas/links.hpp>
#include <atlas/numeric.hpp>

#include <string>

namespace atlas {

/// Constants (lambda, nu) of an eta-Einstein structure Ric = lambda g + nu eta(x)eta
/// on a (2n+1)-manifold. Always satisfies lambda + nu = 2n.
class EtaConstants {
 public:
  /// nu is filled in as 2n - lambda.
  EtaConstants(long n, Rational lambda);
  /// Rejects (InvalidInput) any triple with lambda + nu != 2n.
  EtaConstants(long n, Rational lambda, Rational nu);

  long n() const noexcept { return n_; }
  const Rational& lambda() const noexcept { return lambda_; }
  const Rational& nu() const noexcept { return nu_; }

  /// Positive iff lambda > -2, Null iff lambda = -2, Negative iff lambda < -2.
  SignClass sign() const;

  friend bool operator==(const EtaConstants&, const EtaConstants&) = default;

 private:
  long n_;
  Rational lambda_;
  Rational nu_;
};

/// Positive scale a of a D-homothety xi -> xi/a, eta -> a eta,
/// g -> a g + a(a-1) eta(x)eta.
class HomothetyScale {
 public:
  /// Throws NonPositiveScale unless a > 0.
  explicit HomothetyScale(Rational a);
  const Rational& value() const noexcept { return a_; }
  friend bool operator==(const HomothetyScale&, const HomothetyScale&) = default;

 private:
  Rational a_;
};

/// lambda' = (lambda + 2 - 2a) / a.
EtaConstants homothety(const EtaConstants& c, const HomothetyScale& a);

/// Scale taking a positive structure to Sasakian-Einstein (lambda' = 2n).
HomothetyScale einstein_scale(const EtaConstants& c);

/// (lambda + 2) / (2n + 2) for a negative structure. The result is negative:
/// it is the constant of the Lorentzian relation -g' = a g + a(a-1) eta(x)eta,
/// not a D-homothety.
struct LorentzianScale {
  Rational a;
  static constexpr const char* relation = "-g' = a g + a(a-1) eta(x)eta";
};
LorentzianScale lorentzian_scale(const EtaConstants& c);

enum class SquashClass { Squashed, Einstein, Stretched };
std::string to_string(SquashClass s);

/// Relative to a Sasakian-Einstein reference: a < 1 squashes, a > 1 stretches.
SquashClass squash_class(const HomothetyScale& a);

/// s = 2n(lambda + 1).
Rational scalar_curvature(const EtaConstants& c);

/// Scale a = lambda + 2 that makes the structure scalar-flat (lambda' = -1).
HomothetyScale scalar_flat_scale(const EtaConstants& c);

/// mu^2 = -nu / (2n - 1) of the Einstein-Weyl pair (g, +-mu eta).
/// mu itself is sqrt(mu_squared), which is positive by construction.
struct EinsteinWeylPair {
  Rational mu_squared;
  bool needs_sqrt;  // true unless mu_squared is a perfect rational square
};
EinsteinWeylPair ew_mu(const EtaConstants& c);

/// alpha^2 = (2n + 2) / (2n - 1) of the Heisenberg Einstein-Weyl function
/// f = alpha tan(z + c); the associated homothety scale is 1/alpha.
Rational heisenberg_alpha(long n);

}  // namespace atlas
