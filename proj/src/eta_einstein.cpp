#include <atlas/error.hpp>
#include <atlas/eta_einstein.hpp>

namespace atlas {

EtaConstants::EtaConstants(long n, Rational lambda) : n_(n), lambda_(std::move(lambda)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
  nu_ = 2 * n_ - lambda_;
}

EtaConstants::EtaConstants(long n, Rational lambda, Rational nu)
    : n_(n), lambda_(std::move(lambda)), nu_(std::move(nu)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
  if (lambda_ + nu_ != 2 * n_) {
    throw Error(ErrorKind::InvalidInput, "lambda + nu = " + Rational(lambda_ + nu_).get_str() +
                                             " but 2n = " + std::to_string(2 * n_));
  }
}

SignClass EtaConstants::sign() const {
  const int c = cmp(lambda_, -2);
  if (c > 0) return SignClass::Positive;
  if (c == 0) return SignClass::Null;
  return SignClass::Negative;
}

HomothetyScale::HomothetyScale(Rational a) : a_(std::move(a)) {
  if (a_ <= 0) throw Error(ErrorKind::NonPositiveScale, "scale " + a_.get_str() + " is not positive");
}

EtaConstants homothety(const EtaConstants& c, const HomothetyScale& a) {
  const Rational& s = a.value();
  return EtaConstants(c.n(), Rational((c.lambda() + 2 - 2 * s) / s));
}

HomothetyScale einstein_scale(const EtaConstants& c) {
  if (c.sign() != SignClass::Positive)
    throw Error(ErrorKind::NotPositiveClass, "Einstein scale needs lambda > -2");
  return HomothetyScale(Rational((c.lambda() + 2) / (2 * c.n() + 2)));
}

LorentzianScale lorentzian_scale(const EtaConstants& c) {
  if (c.sign() != SignClass::Negative)
    throw Error(ErrorKind::NotNegativeClass, "Lorentzian scale needs lambda < -2");
  return {Rational((c.lambda() + 2) / (2 * c.n() + 2))};
}

std::string to_string(SquashClass s) {
  switch (s) {
    case SquashClass::Squashed: return "squashed";
    case SquashClass::Einstein: return "einstein";
    case SquashClass::Stretched: return "stretched";
  }
  return "?";
}

SquashClass squash_class(const HomothetyScale& a) {
  const int c = cmp(a.value(), 1);
  if (c < 0) return SquashClass::Squashed;
  if (c == 0) return SquashClass::Einstein;
  return SquashClass::Stretched;
}

Rational scalar_curvature(const EtaConstants& c) { return 2 * c.n() * (c.lambda() + 1); }

HomothetyScale scalar_flat_scale(const EtaConstants& c) {
  if (c.sign() != SignClass::Positive)
    throw Error(ErrorKind::NotPositiveClass, "scalar-flat scale needs lambda > -2");
  return HomothetyScale(Rational(c.lambda() + 2));
}

EinsteinWeylPair ew_mu(const EtaConstants& c) {
  if (c.nu() >= 0) {
    throw Error(ErrorKind::NoEWPair,
                "Einstein-Weyl pair needs nu < 0, got nu = " + c.nu().get_str());
  }
  Rational mu2 = -c.nu() / (2 * c.n() - 1);
  const bool square = mpz_perfect_square_p(mu2.get_num_mpz_t()) &&
                      mpz_perfect_square_p(mu2.get_den_mpz_t());
  return {std::move(mu2), !square};
}

Rational heisenberg_alpha(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
  return make_rational(2 * n + 2, 2 * n - 1);
}

}  // namespace atlas
