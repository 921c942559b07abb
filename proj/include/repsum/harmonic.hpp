#pragma once

/**
 * @file harmonic.hpp
 * @brief Exact harmonic ranges and binomial-harmonic closed forms.
 *
 * H(lo, hi) denotes sum_{i=lo}^{hi} 1/i; H(lo, lo-1) is the empty sum 0.
 */

#include <cstdint>

#include "repsum/rational.hpp"

namespace repsum {

/// sum_{i=lo}^{hi} 1/i. Requires lo >= 1 and hi >= lo - 1.
Rational harmonic_range(std::int64_t lo, std::int64_t hi);

/// sum_{N=p}^{n} C(N+m, m) H(1+m, N+m), reduced to
/// C(n+m+1, m+1) H(2+m, n+m+1) - C(p+m, m+1) H(2+m, p+m).
Rational binomial_harmonic_closed(std::int64_t m, std::int64_t p, std::int64_t n);

/// k-fold repeated sum over [p, n] of C(N_1+m, m) H(1+m, N_1+m).
Rational repeated_binomial_harmonic_closed(std::int64_t k, std::int64_t m, std::int64_t p,
                                           std::int64_t n);

/// Repeated harmonic sum of the given order over [1, n]:
/// C(n+m, m) H(1+m, n+m) with m = order - 1.
///
/// Also evaluates the weighted single sum sum_i C(n+m-i, m)/i and throws
/// std::logic_error if the two disagree.
Rational repeated_harmonic_closed(std::int64_t order, std::int64_t n);

struct IdentitySides {
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs == rhs; }
};

/// lhs = sum_{i=1}^{n} [C(n, i) / C(n+m, i)] / i, rhs = H(1+m, n+m).
/// Each ratio is cross-checked against prod_{k<i} (n-k)/(n+m-k).
IdentitySides harmonic_identity_t53(std::int64_t n, std::int64_t m);

/// lhs = ((n+1)/2) sum_{i=1}^{n} 1/((n+1-i) i), rhs = H_n.
/// The half-range forms for even and odd n are cross-checked as well.
IdentitySides harmonic_identity_t54(std::int64_t n);

}  // namespace repsum
