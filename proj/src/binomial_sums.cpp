#include "repsum/binomial_sums.hpp"

#include <stdexcept>
#include <string>

#include "repsum/binomial.hpp"

namespace repsum {

namespace {

void require_bounds(std::int64_t q, std::int64_t n) {
  if (q < 0) throw std::domain_error("binomial sum: lower bound must be >= 0");
  if (n < q) {
    throw std::domain_error("binomial sum: upper bound " + std::to_string(n) +
                            " is below lower bound " + std::to_string(q));
  }
}

void require_order(std::int64_t m) {
  if (m < 1) throw std::domain_error("binomial sum: order must be >= 1");
}

void require_k(std::int64_t k) {
  if (k < 0) throw std::domain_error("binomial sum: k must be >= 0");
}

}  // namespace

BigInt binomial_sum_closed(std::int64_t q, std::int64_t n, std::int64_t k) {
  require_bounds(q, n);
  require_k(k);
  return binom(n + 1, k + 1) - binom(q, k + 1);
}

BigInt repeated_binomial_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n,
                                    std::int64_t k) {
  require_order(m);
  require_bounds(q, n);
  require_k(k);
  BigInt result = binom(n + m, k + m);
  if (q == 0) return result;
  for (std::int64_t j = 1; j <= m; ++j) {
    result -= binom(q - 1 + j, k + j) * binom(n - q + m - j, m - j);
  }
  return result;
}

BigInt repeated_binomial_sum_closed_alt(std::int64_t m, std::int64_t q, std::int64_t n,
                                        std::int64_t k) {
  require_order(m);
  require_bounds(q, n);
  require_k(k);
  BigInt result = binom(n + m, k + m);
  for (std::int64_t j = 1; j <= m; ++j) {
    result -= binom(q - 1 + j, q - 1 - k) * binom(n - q + m - j, n - q);
  }
  return result;
}

BigInt ones_repeated_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n) {
  require_order(m);
  require_bounds(q, n);
  return binom(n - q + m, m);
}

BigInt product_sum_closed(std::int64_t m, std::int64_t q, std::int64_t n) {
  require_order(m);
  require_bounds(q, n);
  return binom(n + m, m) - binom(n - q + m, m);
}

BigInt binom_as_ones_sum(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) {
    throw std::domain_error("binom_as_ones_sum: requires 1 <= k <= n");
  }
  BigInt result = ones_repeated_sum_closed(k, 1, n - k + 1);
  if (result != binom(n, k)) {
    throw std::logic_error("binom_as_ones_sum: repeated-ones value disagrees with C(n, k)");
  }
  return result;
}

}  // namespace repsum
