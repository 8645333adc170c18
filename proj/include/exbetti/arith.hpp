#pragma once

#include <cstdint>

namespace exbetti {

using Count = std::uint64_t;

/// Overflow-checked helpers. Overflow raises ErrorKind::Overflow.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// C(n, k) with C(n, k) = 0 for k < 0, k > n or n < 0.
Count binomial(long n, long k);

}  // namespace exbetti
