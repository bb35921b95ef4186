#include <atlas/curvature.hpp>
#include <atlas/eta_einstein.hpp>

#include <numbers>

namespace atlas::curvature {

double ew_function_check(long n, std::span<const double> samples, double c) {
  const double alpha2 = heisenberg_alpha(n).get_d();
  const double alpha = std::sqrt(alpha2);
  double worst = 0.0;
  for (const double z : samples) {
    const double x = z + c;
    // distance from x to the nearest pi/2 + k pi
    const double off = std::remainder(x - std::numbers::pi / 2, std::numbers::pi);
    if (std::abs(off) < 1e-6) {
      throw Error(ErrorKind::PoleProximity,
                  "sample z = " + std::to_string(z) + " is within 1e-6 of a pole of tan");
    }
    const double t = std::tan(x);
    const double f = alpha * t;
    const double sec2 = 1.0 / (std::cos(x) * std::cos(x));
    const double xi_f = alpha * (alpha * sec2);  // alpha * d/dz (alpha tan)
    worst = std::max(worst, std::abs(f * f - xi_f + alpha2));
  }
  return worst;
}

}  // namespace atlas::curvature
