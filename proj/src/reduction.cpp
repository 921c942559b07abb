#include "repsum/reduction.hpp"

#include <string>
#include <vector>

#include "repsum/binomial.hpp"
#include "repsum/kernels.hpp"

namespace repsum {

namespace {

void require_cover(const Sequence& seq, std::int64_t lo, std::int64_t hi) {
  if (!seq.covers(lo, hi)) {
    throw std::domain_error("repeated sum: sequence [" + std::to_string(seq.first_index()) + ", " +
                            std::to_string(seq.last_index()) + "] does not cover [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::span<const Rational> slice(const Sequence& seq, std::int64_t lo, std::int64_t hi) {
  return seq.values().subspan(static_cast<std::size_t>(lo - seq.first_index()),
                              static_cast<std::size_t>(hi - lo + 1));
}

void enforce_ceiling(const BigInt& terms, std::uint64_t ceiling) {
  if (terms > BigInt(static_cast<unsigned long>(ceiling))) throw NaiveCeilingExceeded(terms, ceiling);
}

class LiteralEvaluator {
 public:
  LiteralEvaluator(const Sequence& seq, std::int64_t lower) : seq_(seq), lower_(lower) {}

  Rational eval(std::int64_t order, std::int64_t upper) {
    if (order == 0) {
      ++reads_;
      return seq_.at(upper);
    }
    Rational s;
    for (std::int64_t idx = lower_; idx <= upper; ++idx) s += eval(order - 1, idx);
    return s;
  }

  std::uint64_t reads() const { return reads_; }

 private:
  const Sequence& seq_;
  std::int64_t lower_;
  std::uint64_t reads_ = 0;
};

// Level-by-level memo of S(j, q, N) for N in [q, n]. The read counter runs
// the same recurrence on leaf counts.
EvalReport memoized_naive(const Sequence& seq, const SumSpec& spec) {
  const auto vals = slice(seq, spec.lower, spec.upper);
  std::vector<Rational> level(vals.begin(), vals.end());
  std::vector<BigInt> reads(level.size(), BigInt(1));
  for (std::int64_t j = 1; j <= spec.order; ++j) {
    for (std::size_t i = 1; i < level.size(); ++i) {
      level[i] += level[i - 1];
      reads[i] += reads[i - 1];
    }
  }
  return {level.back(), reads.back().get_ui(), Method::naive};
}

Rational reduced_value(const Sequence& seq, std::int64_t order, std::int64_t q, std::int64_t n) {
  return kernels::weighted_sum_parallel(slice(seq, q, n), order - 1).value;
}

}  // namespace

void SumSpec::validate() const {
  if (order < 1) throw std::domain_error("sum spec: order must be >= 1");
  if (lower < 0) throw std::domain_error("sum spec: lower bound must be >= 0");
  if (upper < lower) throw std::domain_error("sum spec: upper bound below lower bound");
}

std::string_view to_string(Method m) { return m == Method::naive ? "naive" : "reduced"; }

NaiveCeilingExceeded::NaiveCeilingExceeded(const BigInt& terms, std::uint64_t ceiling)
    : std::runtime_error("naive evaluation needs " + terms.get_str() +
                         " term reads, above the ceiling of " + std::to_string(ceiling)),
      terms_(terms),
      ceiling_(ceiling) {}

BigInt naive_term_count(const SumSpec& spec) {
  spec.validate();
  return binom(spec.upper - spec.lower + spec.order, spec.order);
}

BigInt term_multiplicity(std::int64_t i, const SumSpec& spec) {
  spec.validate();
  if (i < spec.lower || i > spec.upper) {
    throw std::domain_error("term_multiplicity: index " + std::to_string(i) + " outside [q, n]");
  }
  return binom(spec.upper + spec.order - 1 - i, spec.order - 1);
}

EvalReport naive_repeated_sum(const Sequence& seq, const SumSpec& spec,
                              const NaiveOptions& options) {
  spec.validate();
  require_cover(seq, spec.lower, spec.upper);
  enforce_ceiling(naive_term_count(spec), options.ceiling);
  if (!options.literal) return memoized_naive(seq, spec);
  LiteralEvaluator ev(seq, spec.lower);
  Rational value = ev.eval(spec.order, spec.upper);
  return {std::move(value), ev.reads(), Method::naive};
}

EvalReport reduce_repeated_sum(const Sequence& seq, const SumSpec& spec) {
  spec.validate();
  require_cover(seq, spec.lower, spec.upper);
  auto sum = kernels::weighted_sum_parallel(slice(seq, spec.lower, spec.upper), spec.order - 1);
  return {std::move(sum.value), sum.reads, Method::reduced};
}

Rational variation_full(const Sequence& seq, const SumSpec& spec) {
  spec.validate();
  require_cover(seq, spec.lower, spec.upper + 1);
  const std::int64_t q = spec.lower;
  const std::int64_t n = spec.upper;
  Rational result = seq.at(n + 1);
  for (std::int64_t k = 1; k <= spec.order; ++k) result += reduced_value(seq, k, q, n);
  if (result != reduced_value(seq, spec.order, q, n + 1)) {
    throw std::logic_error("variation_full: update disagrees with the extended sum");
  }
  return result;
}

Rational variation_partial(const Sequence& seq, const SumSpec& spec, std::int64_t p) {
  spec.validate();
  if (p < 1 || p > spec.order) throw std::domain_error("variation_partial: requires 1 <= p <= m");
  require_cover(seq, spec.lower, spec.upper + 1);
  const std::int64_t q = spec.lower;
  const std::int64_t n = spec.upper;
  Rational result = reduced_value(seq, p, q, n + 1);
  for (std::int64_t k = p + 1; k <= spec.order; ++k) result += reduced_value(seq, k, q, n);
  if (result != reduced_value(seq, spec.order, q, n + 1)) {
    throw std::logic_error("variation_partial: update disagrees with the extended sum");
  }
  return result;
}

Rational naive_binomial_sequence_sum(const Sequence& seq, std::int64_t k, std::int64_t weight_order,
                                     std::int64_t q, std::int64_t n, std::uint64_t ceiling) {
  if (k < 1) throw std::domain_error("binomial-sequence sum: k must be >= 1");
  if (weight_order < 0) throw std::domain_error("binomial-sequence sum: weight order must be >= 0");
  SumSpec{k, q, n}.validate();
  require_cover(seq, q, n);
  enforce_ceiling(binom(n - q + k, k), ceiling);

  // level == 1 is the innermost loop; `upper` is the index of the level above.
  auto eval = [&](auto&& self, std::int64_t level, std::int64_t upper) -> Rational {
    Rational s;
    for (std::int64_t idx = q; idx <= upper; ++idx) {
      if (level == 1) {
        s += Rational(binom(upper - idx + weight_order, weight_order)) * seq.at(idx);
      } else {
        s += self(self, level - 1, idx);
      }
    }
    return s;
  };
  return eval(eval, k, n);
}

Rational reduce_binomial_sequence_sum(const Sequence& seq, std::int64_t k,
                                      std::int64_t weight_order, std::int64_t q, std::int64_t n) {
  if (k < 1) throw std::domain_error("binomial-sequence sum: k must be >= 1");
  if (weight_order < 0) throw std::domain_error("binomial-sequence sum: weight order must be >= 0");
  SumSpec{k, q, n}.validate();
  require_cover(seq, q, n);
  return kernels::weighted_sum_parallel(slice(seq, q, n), weight_order + k - 1).value;
}

}  // namespace repsum
