#pragma once

/**
 * @file identities.hpp
 * @brief Registry of identity sweeps: closed form vs brute-force oracle.
 *
 * Each entry evaluates a closed form over a parameter grid and compares it
 * with a literal evaluation by exact equality. Grid cells are independent and
 * are spread across OpenMP threads; the report lists failures in grid order.
 *
 * Registry keys and what they sweep:
 *
 *   T2.1  sum of C(i, k) over [q, n]                       k <= max_k, q <= n <= max_n
 *   T2.2  repeated sum of C(N_1, k), both indexings         m <= max_m, k <= max_k, q <= n <= max_n
 *   C2.5  product sum of binomials, both printed forms      m <= max_m, q <= n <= max_n
 *   T3.1  repeated sums of ones from 0 and from 1           m <= max_m, n <= max_n
 *   T3.3  C(n, k) as a repeated sum of ones (both ranges)   1 <= k <= n <= max_n
 *   T3.5  repeated sequence terms vs cumulative sums        m <= max_m, delta in {1,-2,3/7}, n <= max_n
 *   T3.6  repeated sums of repeated sequences               m, k <= max_m, n <= max_n
 *   T4.1  binomial-harmonic sum                             m <= max_m, p <= n <= max_n
 *   T4.2  repeated binomial-harmonic sum                    k <= max_k, m <= max_m, p <= n <= max_n
 *   C4.3  repeated harmonic sum vs running-total passes     order - 1 <= max_m, n <= max_n
 *   T5.1  repeated sum reduction, random sequences          m <= max_m, q <= n <= max_n
 *   T5.2  repeated harmonic sum vs nested loops             order <= max_m, n <= max_n
 *   T5.3  binomial-ratio harmonic identity                  n <= max_n, m <= max_m
 *   T5.4  symmetric reciprocal-product harmonic identity    n <= max_n
 *   T5.5  simple binomial-sequence sum (k = 2)              m <= max_m, q <= n <= max_n
 *   T5.6  repeated binomial-sequence sum                    k <= max_k, w <= max_m, q <= n <= max_n
 *   VAR1  full variation formula                            m <= max_m, q <= n <= max_n
 *   VAR2  partial variation formula                         p <= m <= max_m, q <= n <= max_n
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace repsum {

struct IdentityGrid {
  std::int64_t max_n = 0;
  std::int64_t max_m = 0;
  std::int64_t max_k = 0;
  std::uint64_t seed = 20240611;
};

using IdentityParams = std::vector<std::pair<std::string, std::int64_t>>;

struct IdentityFailure {
  IdentityParams params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  IdentityGrid grid;
  std::uint64_t cases = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct IdentityInfo {
  std::string_view id;
  std::string_view summary;
  IdentityGrid defaults;
};

const std::vector<IdentityInfo>& identity_registry();

/// nullptr for an unknown id.
const IdentityInfo* find_identity(std::string_view id);

/// Runs the sweep. Unset overrides fall back to the registry defaults.
/// Throws std::invalid_argument for an unknown id.
IdentityReport run_identity(std::string_view id, std::optional<std::int64_t> max_n = std::nullopt,
                            std::optional<std::int64_t> max_m = std::nullopt,
                            std::optional<std::int64_t> max_k = std::nullopt);

}  // namespace repsum
