#pragma once

// Weighted single-sum kernels behind every reduced repeated sum.
//
// For values a_q .. a_n laid out contiguously, both kernels compute
//
//     sum_{i=q}^{n} C((n - i) + w, w) * a_i
//
// where w is the weight order (order - 1 for a plain repeated sum). The
// serial kernel walks the weights with the ratio recurrence
// C(d+1+w, w) = C(d+w, w) * (d+1+w) / (d+1); the OpenMP kernel evaluates each
// weight independently so iterations carry no dependency. Results are exact,
// so both kernels must agree bit for bit regardless of thread count.

#include <cstdint>
#include <span>

#include "repsum/rational.hpp"

namespace repsum::kernels {

struct WeightedSum {
  Rational value;
  std::uint64_t reads = 0;  // sequence elements read
};

WeightedSum weighted_sum_serial(std::span<const Rational> values, std::int64_t weight_order);

/// num_threads <= 0 uses the OpenMP default.
WeightedSum weighted_sum_parallel(std::span<const Rational> values, std::int64_t weight_order,
                                  int num_threads = 0);

}  // namespace repsum::kernels
