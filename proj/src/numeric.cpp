#include <atlas/error.hpp>
#include <atlas/numeric.hpp>

#include <stdexcept>

namespace atlas {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateExponent: return "DegenerateExponent";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorKind::NotASphere: return "NotASphere";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::NotPositiveClass: return "NotPositiveClass";
    case ErrorKind::NotNegativeClass: return "NotNegativeClass";
    case ErrorKind::NoEWPair: return "NoEWPair";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::CorruptLine: return "CorruptLine";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

}  // namespace atlas
