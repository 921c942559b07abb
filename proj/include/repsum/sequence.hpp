#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "repsum/rational.hpp"

namespace repsum {

/// Finite run a_first .. a_last of exact values with an explicit first index.
///
/// Reads at indices <= 0 below the stored range return 0 (zero extension).
/// Any other read outside the stored range throws std::out_of_range.
class Sequence {
 public:
  /// Throws std::domain_error if values is empty.
  Sequence(std::int64_t first_index, std::vector<Rational> values);

  std::int64_t first_index() const { return first_; }
  std::int64_t last_index() const { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }

  std::span<const Rational> values() const { return values_; }

  bool covers(std::int64_t lo, std::int64_t hi) const {
    return lo >= first_ && hi <= last_index();
  }

  /// Stored value; throws std::out_of_range outside [first_index, last_index].
  const Rational& at(std::int64_t i) const;

  /// Stored value, or 0 for i <= 0 below the stored range.
  Rational extended(std::int64_t i) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::int64_t first_;
  std::vector<Rational> values_;
};

}  // namespace repsum
