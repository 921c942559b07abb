#pragma once

/**
 * @file binomial_sums.hpp
 * @brief Closed forms for sums and repeated sums of binomial coefficients.
 *
 * A repeated sum of order m with bounds [q, n] nests m summations where
 * each inner upper bound is the next outer index:
 *
 *     sum_{N_m=q}^{n} ... sum_{N_1=q}^{N_2} f(N_1)
 *
 * All functions take non-negative bounds with n >= q and throw
 * std::domain_error otherwise.
 */

#include <cstdint>

#include "repsum/rational.hpp"

namespace repsum {

/// sum_{i=q}^{n} C(i, k) = C(n+1, k+1) - C(q, k+1).
BigInt binomial_sum_closed(std::int64_t q, std::int64_t n, std::int64_t k);

/// Order-m repeated sum of C(N_1, k) over [q, n]:
/// C(n+m, k+m) - sum_{j=1}^{m} C(q-1+j, k+j) C(n-q+m-j, m-j).
/// Collapses to C(n+m, k+m) when q = 0.
BigInt repeated_binomial_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n, std::int64_t k);

/// Same value through the complementary indexing
/// C(n+m, k+m) - sum_{j=1}^{m} C(q-1+j, q-1-k) C(n-q+m-j, n-q).
BigInt repeated_binomial_sum_closed_alt(std::int64_t m, std::int64_t q, std::int64_t n,
                                        std::int64_t k);

/// Order-m repeated sum of ones over [q, n] = C(n-q+m, m).
BigInt ones_repeated_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n);

/// sum_{j=1}^{m} C(q-1+j, j) C(n-q+m-j, m-j) = C(n+m, m) - C(n-q+m, m).
BigInt product_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n);

/// C(n, k) read as the k-fold repeated sum of ones over [1, n-k+1].
/// Requires 1 <= k <= n.
BigInt binom_as_ones_sum(std::int64_t n, std::int64_t k);

}  // namespace repsum
