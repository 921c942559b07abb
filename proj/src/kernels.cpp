#include "repsum/kernels.hpp"

#include <omp.h>

#include <stdexcept>

#include "repsum/binomial.hpp"

namespace repsum::kernels {

WeightedSum weighted_sum_serial(std::span<const Rational> values, std::int64_t weight_order) {
  if (weight_order < 0) throw std::domain_error("weighted_sum: negative weight order");
  WeightedSum out;
  BigInt weight = 1;  // C(0 + w, w)
  std::int64_t d = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it, ++d) {
    if (d > 0) {
      weight *= static_cast<unsigned long>(d + weight_order);
      mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(d));
    }
    out.value += Rational(weight) * *it;
    ++out.reads;
  }
  return out;
}

WeightedSum weighted_sum_parallel(std::span<const Rational> values, std::int64_t weight_order,
                                  int num_threads) {
  if (weight_order < 0) throw std::domain_error("weighted_sum: negative weight order");
  const auto len = static_cast<std::int64_t>(values.size());
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();

  Rational total;
  std::uint64_t reads = 0;
#pragma omp parallel num_threads(threads) reduction(+ : reads)
  {
    Rational local;
#pragma omp for schedule(static) nowait
    for (std::int64_t j = 0; j < len; ++j) {
      const std::int64_t d = len - 1 - j;
      local += Rational(binom(d + weight_order, weight_order)) * values[static_cast<std::size_t>(j)];
      ++reads;
    }
#pragma omp critical(repsum_weighted_sum)
    total += local;
  }
  return {std::move(total), reads};
}

}  // namespace repsum::kernels
