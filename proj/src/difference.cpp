#include "repsum/difference.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "repsum/binomial.hpp"

namespace repsum {

namespace {

void require_left_anchor(const Sequence& seq) {
  if (seq.first_index() > 1) {
    throw std::domain_error("difference: sequence must start at index <= 1, got " +
                            std::to_string(seq.first_index()));
  }
}

// One backward-difference step in place. The slot left of the first stored
// value sits at index <= 0 and reads as zero.
void difference_step(std::vector<Rational>& row) {
  for (std::size_t i = row.size(); i-- > 1;) row[i] -= row[i - 1];
}

bool all_equal(const std::vector<Rational>& row) {
  return std::all_of(row.begin(), row.end(), [&](const Rational& v) { return v == row.front(); });
}

}  // namespace

DifferenceTable::DifferenceTable(Sequence base, std::int64_t max_order) {
  if (max_order < 0) throw std::domain_error("difference table: negative order");
  require_left_anchor(base);
  const std::int64_t first = base.first_index();
  std::vector<Rational> cur(base.values().begin(), base.values().end());
  rows_.reserve(static_cast<std::size_t>(max_order) + 1);
  rows_.push_back(std::move(base));
  for (std::int64_t m = 1; m <= max_order; ++m) {
    difference_step(cur);
    rows_.emplace_back(first, cur);
  }
}

Sequence difference(const Sequence& seq, std::int64_t m) {
  if (m < 0) throw std::domain_error("difference: negative order");
  require_left_anchor(seq);
  std::vector<Rational> cur(seq.values().begin(), seq.values().end());
  for (std::int64_t step = 0; step < m; ++step) difference_step(cur);
  return Sequence(seq.first_index(), std::move(cur));
}

Rational difference_explicit(const Sequence& seq, std::int64_t m, std::int64_t p, std::int64_t n) {
  if (p < 0 || p > m) throw std::domain_error("difference_explicit: requires 0 <= p <= m");
  if (n < seq.first_index() || n > seq.last_index()) {
    throw std::domain_error("difference_explicit: index " + std::to_string(n) +
                            " outside the sequence");
  }
  const Sequence lower = difference(seq, m - p);
  Rational result;
  for (std::int64_t j = 0; j <= p; ++j) {
    const Rational term = Rational(binom(p, j)) * lower.extended(n - j);
    if (j % 2 == 0) {
      result += term;
    } else {
      result -= term;
    }
  }
  return result;
}

std::optional<RepeatedSequenceSpec> detect_repeated_degree(const Sequence& seq,
                                                           std::int64_t max_order) {
  if (seq.first_index() != 1) {
    throw std::domain_error("detect: sequence must start at index 1");
  }
  if (max_order < 0) throw std::domain_error("detect: negative max order");
  const auto length = static_cast<std::int64_t>(seq.size());
  const std::int64_t limit = std::min(max_order, length - 1);
  std::vector<Rational> cur(seq.values().begin(), seq.values().end());
  for (std::int64_t m = 0; m <= limit; ++m) {
    if (m > 0) difference_step(cur);
    if (all_equal(cur)) return RepeatedSequenceSpec{m, cur.front()};
  }
  return std::nullopt;
}

Rational repeated_sequence_term(const RepeatedSequenceSpec& spec, std::int64_t n) {
  if (n < 1) throw std::domain_error("repeated_sequence_term: index must be >= 1");
  if (spec.degree < 0) throw std::domain_error("repeated_sequence_term: negative degree");
  return spec.delta * Rational(binom(n + spec.degree - 1, spec.degree));
}

Sequence repeated_sequence(const RepeatedSequenceSpec& spec, std::int64_t length) {
  if (length < 1) throw std::domain_error("repeated_sequence: length must be >= 1");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(length));
  for (std::int64_t n = 1; n <= length; ++n) values.push_back(repeated_sequence_term(spec, n));
  return Sequence(1, std::move(values));
}

Rational repeated_sequence_repsum(const RepeatedSequenceSpec& spec, std::int64_t k, std::int64_t n) {
  if (k < 1) throw std::domain_error("repeated_sequence_repsum: order must be >= 1");
  if (n < 1) throw std::domain_error("repeated_sequence_repsum: n must be >= 1");
  return repeated_sequence_term(RepeatedSequenceSpec{spec.degree + k, spec.delta}, n);
}

}  // namespace repsum
