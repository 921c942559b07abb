#pragma once

/**
 * @file difference.hpp
 * @brief Backward differences and repeated sequences.
 *
 * The m-th difference is the backward difference iterated m times,
 * D^m x_n = D^{m-1} x_n - D^{m-1} x_{n-1}, with D^0 the identity. Values at
 * indices <= 0 are read as zero, so every row is defined down to the first
 * stored index.
 *
 * A repeated sequence of degree m has D^m x_n equal to one constant delta for
 * every n >= 1 under that zero extension. Its terms are delta * C(n+m-1, m).
 * Ordinary polynomial sequences such as n^2 do not qualify: their boundary
 * difference at n = 1 breaks constancy.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "repsum/rational.hpp"
#include "repsum/sequence.hpp"

namespace repsum {

struct RepeatedSequenceSpec {
  std::int64_t degree = 0;
  Rational delta;

  friend bool operator==(const RepeatedSequenceSpec&, const RepeatedSequenceSpec&) = default;
};

/// Rows D^0 .. D^max_order of a sequence over its stored index range.
class DifferenceTable {
 public:
  /// Throws std::domain_error if base.first_index() > 1 or max_order < 0.
  DifferenceTable(Sequence base, std::int64_t max_order);

  const Sequence& base() const { return rows_.front(); }
  std::int64_t max_order() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  const Sequence& row(std::int64_t m) const { return rows_.at(static_cast<std::size_t>(m)); }
  const std::vector<Sequence>& rows() const { return rows_; }

 private:
  std::vector<Sequence> rows_;
};

/// D^m over the sequence's range. Throws std::domain_error for m < 0 or a
/// sequence starting above index 1 (its left neighbour would be unknown).
Sequence difference(const Sequence& seq, std::int64_t m);

/// sum_{j=0}^{p} (-1)^j C(p, j) D^{m-p} x_{n-j}; equals D^m x_n for any
/// 0 <= p <= m. Throws std::domain_error for p > m, p < 0, or n outside the
/// stored range.
Rational difference_explicit(const Sequence& seq, std::int64_t m, std::int64_t p, std::int64_t n);

/// Smallest m <= max_order (and m < length) whose difference row is one
/// constant over [1, last_index]; nullopt if none. Requires first_index == 1.
std::optional<RepeatedSequenceSpec> detect_repeated_degree(const Sequence& seq,
                                                           std::int64_t max_order);

/// delta * C(n+m-1, m) for n >= 1.
Rational repeated_sequence_term(const RepeatedSequenceSpec& spec, std::int64_t n);

/// Terms 1..length of the repeated sequence.
Sequence repeated_sequence(const RepeatedSequenceSpec& spec, std::int64_t length);

/// k-fold repeated sum from 1 to n of the repeated sequence:
/// delta * C(n+m+k-1, m+k), the degree m+k term with the same delta.
Rational repeated_sequence_repsum(const RepeatedSequenceSpec& spec, std::int64_t k, std::int64_t n);

}  // namespace repsum
