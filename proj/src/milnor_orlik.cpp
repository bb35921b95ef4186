#include <atlas/error.hpp>
#include <atlas/milnor_orlik.hpp>

#include <algorithm>

namespace atlas {

BettiResult betti(const WeightSystem& ws) {
  const std::size_t n1 = ws.nvars();
  if (n1 > 24) {
    throw Error(ErrorKind::BoundsTooLarge,
                "subset enumeration over " + std::to_string(n1) + " variables");
  }
  std::vector<Integer> u(n1), v(n1);
  std::vector<Rational> quotients;
  quotients.reserve(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    quotients.push_back(make_rational(ws.degree(), ws.weights()[i]));
    u[i] = quotients.back().get_num();
    v[i] = quotients.back().get_den();
  }

  Rational sum = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n1;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Integer num = 1, den = 1, l = 1;
    std::size_t s = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      if (!(mask >> i & 1)) continue;
      num *= u[i];
      den *= v[i];
      l = lcm(l, u[i]);
      ++s;
    }
    Rational term = make_rational(num, den * l);
    if ((n1 - s) % 2) term = -term;
    sum += term;
  }

  if (sum.get_den() != 1) {
    throw Error(ErrorKind::NonIntegerResult,
                "Betti sum " + sum.get_str() + " is not an integer for " + ws.key());
  }
  if (sum < 0)
    throw Error(ErrorKind::NonIntegerResult, "Betti sum is negative for " + ws.key());
  return {Integer(sum.get_num()), ws.link_dimension(), std::move(quotients)};
}

bool is_rational_homology_sphere(const WeightSystem& ws) { return betti(ws).middle_betti == 0; }

std::string TorsionInfo::to_string() const {
  switch (kind) {
    case Kind::TorsionFree: return "torsion-free";
    case Kind::CyclicPair: return "Z_" + order.get_str() + "+Z_" + order.get_str();
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

TorsionInfo torsion_closed_form(const BPExponents& a) {
  if (a.size() == 4) {
    const auto s = a.sorted();
    Integer k = 0;
    int threes = 0;
    for (const auto& e : s.values()) {
      if (e == 3 && threes < 3) ++threes;
      else k = e;
    }
    if (threes == 3 && k != 0 && k % 3 != 0) return {TorsionInfo::Kind::CyclicPair, k};
    if (is_well_formed(bp_link(a))) return {TorsionInfo::Kind::TorsionFree, 0};
  }
  return {TorsionInfo::Kind::Unknown, 0};
}

}  // namespace atlas
