#pragma once

#include <cstdint>

#include "repsum/rational.hpp"

namespace repsum {

/// Binomial coefficient as a total function on integer pairs.
///
/// Returns n!/(k!(n-k)!) for 0 <= k <= n and 0 otherwise (k < 0, n < 0 or
/// k > n). Every closed form in this library relies on out-of-range
/// coefficients vanishing, so they can be written without case splits.
///
/// Evaluated as a running product with an exact division at every step,
/// using the smaller of k and n-k.
BigInt binom(std::int64_t n, std::int64_t k);

}  // namespace repsum
