#include "repsum/binomial.hpp"

#include <algorithm>

namespace repsum {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i the running value is C(n-k+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

}  // namespace repsum
