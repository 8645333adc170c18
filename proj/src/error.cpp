#include "exbetti/error.hpp"

#include "exbetti/arith.hpp"

#include <numeric>

namespace exbetti {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::EmptyAmbient: return "EmptyAmbient";
    case ErrorKind::EmptyIdeal: return "EmptyIdeal";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorKind::Uncovered: return "UncoveredByCharacterization";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::CapTooLow: return "CapTooLow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return out;
}

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each partial product C(n-k+i, i) is exact.
  Count result = 1;
  for (long i = 1; i <= k; ++i) {
    Count num = static_cast<Count>(n - k + i);
    // result * num / i without losing exactness: divide by gcd first.
    Count g = std::gcd(result, static_cast<Count>(i));
    Count r = result / g;
    Count d = static_cast<Count>(i) / g;
    result = checked_mul(r, num / d);
  }
  return result;
}

}  // namespace exbetti
