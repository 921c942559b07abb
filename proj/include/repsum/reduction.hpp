#pragma once

/**
 * @file reduction.hpp
 * @brief Repeated sums of arbitrary sequences: literal evaluation and reduction.
 *
 * S(m, q, n) is the order-m repeated sum of a over [q, n]:
 *
 *     S(0, q, n) = a_n
 *     S(m, q, n) = sum_{N=q}^{n} S(m-1, q, N)
 *
 * Expanded fully it adds C(n-q+m, m) terms. The reduction rewrites it as a
 * single sum in which a_i carries the weight C(n+m-1-i, m-1), which is also
 * the number of times a_i occurs in the expansion. Only n-q+1 reads remain,
 * whatever the order.
 */

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "repsum/rational.hpp"
#include "repsum/sequence.hpp"

namespace repsum {

inline constexpr std::uint64_t kDefaultNaiveCeiling = 10'000'000;

struct SumSpec {
  std::int64_t order = 1;  // m >= 1
  std::int64_t lower = 1;  // q >= 0
  std::int64_t upper = 1;  // n >= q

  /// Throws std::domain_error if the invariants above do not hold.
  void validate() const;
};

enum class Method { naive, reduced };

std::string_view to_string(Method m);

struct EvalReport {
  Rational value;
  std::uint64_t terms_touched = 0;
  Method method = Method::reduced;
};

/// Raised before a naive evaluation whose expanded term count exceeds the ceiling.
class NaiveCeilingExceeded : public std::runtime_error {
 public:
  NaiveCeilingExceeded(const BigInt& terms, std::uint64_t ceiling);

  const BigInt& terms() const { return terms_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  BigInt terms_;
  std::uint64_t ceiling_;
};

struct NaiveOptions {
  std::uint64_t ceiling = kDefaultNaiveCeiling;
  // Walk every leaf of the nested loops instead of the memoized recursion.
  bool literal = false;
};

/// Terms added by the fully expanded sum: C(n-q+m, m).
BigInt naive_term_count(const SumSpec& spec);

/// Occurrences of a_i in the expanded sum: C(n+m-1-i, m-1). Requires q <= i <= n.
BigInt term_multiplicity(std::int64_t i, const SumSpec& spec);

/// Direct evaluation from the recursive definition.
///
/// The default mode memoizes S(j, q, N) level by level and counts leaf reads
/// as if the recursion were expanded; `literal` really expands it. Both report
/// terms_touched = C(n-q+m, m). Throws NaiveCeilingExceeded above the ceiling
/// and std::domain_error if seq does not cover [q, n].
EvalReport naive_repeated_sum(const Sequence& seq, const SumSpec& spec,
                              const NaiveOptions& options = {});

/// Single weighted sum; terms_touched = n - q + 1.
EvalReport reduce_repeated_sum(const Sequence& seq, const SumSpec& spec);

/// sum_{k=1}^{m} S(k, q, n) + a_{n+1}, checked against S(m, q, n+1).
/// seq must cover [q, n+1].
Rational variation_full(const Sequence& seq, const SumSpec& spec);

/// sum_{k=p+1}^{m} S(k, q, n) + S(p, q, n+1) for 1 <= p <= m, checked against
/// S(m, q, n+1).
Rational variation_partial(const Sequence& seq, const SumSpec& spec, std::int64_t p);

/// Literal k-fold nested sum of C((N_2 - N_1) + w, w) a_{N_1} over [q, n],
/// where N_2 is the index one level up (n itself when k = 1).
Rational naive_binomial_sequence_sum(const Sequence& seq, std::int64_t k, std::int64_t weight_order,
                                     std::int64_t q, std::int64_t n,
                                     std::uint64_t ceiling = kDefaultNaiveCeiling);

/// sum_{N=q}^{n} C((n - N) + w + k - 1, w + k - 1) a_N.
Rational reduce_binomial_sequence_sum(const Sequence& seq, std::int64_t k,
                                      std::int64_t weight_order, std::int64_t q, std::int64_t n);

}  // namespace repsum
