#pragma once

// Brute-force reference evaluations.
//
// Everything here is written from the definitions only: literal nested
// loops, factorial quotients, cumulative sums. Nothing calls a closed form
// or a reduction kernel, so these can stand as independent oracles for the
// library and for the `identity` command.

#include <cstdint>
#include <random>
#include <vector>

#include "repsum/rational.hpp"
#include "repsum/sequence.hpp"

namespace repsum::oracle {

inline BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

/// n! / (k! (n-k)!) with the out-of-range cases pinned to zero.
inline BigInt factorial_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// sum_{N_m=q}^{n} ... sum_{N_1=q}^{N_2} f(N_1), one loop per level.
template <class T, class F>
T nested_sum(std::int64_t order, std::int64_t q, std::int64_t n, F&& f) {
  if (order == 0) return T(f(n));
  T s{};
  for (std::int64_t idx = q; idx <= n; ++idx) s += nested_sum<T>(order - 1, q, idx, f);
  return s;
}

/// Like nested_sum but the innermost term also sees the index one level up
/// (`upper` itself for order 1): f(N_1, N_2).
template <class T, class F>
T nested_pair_sum(std::int64_t order, std::int64_t q, std::int64_t upper, F&& f) {
  T s{};
  for (std::int64_t idx = q; idx <= upper; ++idx) {
    if (order == 1) {
      s += T(f(idx, upper));
    } else {
      s += nested_pair_sum<T>(order - 1, q, idx, f);
    }
  }
  return s;
}

template <class T, class F>
T direct_sum(std::int64_t lo, std::int64_t hi, F&& f) {
  T s{};
  for (std::int64_t i = lo; i <= hi; ++i) s += T(f(i));
  return s;
}

inline Rational harmonic(std::int64_t lo, std::int64_t hi) {
  return direct_sum<Rational>(lo, hi, [](std::int64_t i) { return make_rational(1, i); });
}

/// Order-m repeated sum of a over [q, n] by m passes of running totals.
/// Returns the value at n.
inline Rational prefix_pass_repeated_sum(const Sequence& a, std::int64_t order, std::int64_t q,
                                         std::int64_t n) {
  std::vector<Rational> row;
  for (std::int64_t i = q; i <= n; ++i) row.push_back(a.at(i));
  for (std::int64_t pass = 0; pass < order; ++pass) {
    Rational run;
    for (auto& v : row) {
      run += v;
      v = run;
    }
  }
  return row.back();
}

/// Repeated sequence of degree m built from its definition: start from the
/// constant delta and take cumulative sums from index 1, m times.
inline Sequence cumulative_repeated_sequence(std::int64_t degree, const Rational& delta,
                                             std::int64_t length) {
  std::vector<Rational> row(static_cast<std::size_t>(length), delta);
  for (std::int64_t pass = 0; pass < degree; ++pass) {
    for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
  }
  return Sequence(1, std::move(row));
}

/// Random rationals with numerators in [-range, range] and denominators in
/// [1, range].
inline Sequence random_sequence(std::mt19937_64& rng, std::int64_t first_index,
                                std::int64_t length, std::int64_t range = 9) {
  std::uniform_int_distribution<std::int64_t> num(-range, range);
  std::uniform_int_distribution<std::int64_t> den(1, range);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) values.push_back(make_rational(num(rng), den(rng)));
  return Sequence(first_index, std::move(values));
}

}  // namespace repsum::oracle
