#include "repsum/binomial_sums.hpp"

#include <gtest/gtest.h>

#include "repsum/binomial.hpp"
#include "repsum/oracle/brute_force.hpp"

namespace repsum {
namespace {

BigInt nested_binom(std::int64_t m, std::int64_t q, std::int64_t n, std::int64_t k) {
  return oracle::nested_sum<BigInt>(m, q, n, [k](std::int64_t i) { return oracle::factorial_binom(i, k); });
}

BigInt nested_ones(std::int64_t m, std::int64_t q, std::int64_t n) {
  return oracle::nested_sum<BigInt>(m, q, n, [](std::int64_t) { return BigInt(1); });
}

TEST(BinomialSumTest, Examples) {
  EXPECT_EQ(binomial_sum_closed(2, 5, 2), 20);  // 1 + 3 + 6 + 10
  EXPECT_EQ(binomial_sum_closed(0, 4, 2), 10);
  EXPECT_EQ(binomial_sum_closed(3, 3, 2), 3);
  EXPECT_THROW(binomial_sum_closed(5, 4, 1), std::domain_error);
}

TEST(BinomialSumTest, StartAtZeroOrKAgree) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial_sum_closed(0, n, k), binom(n + 1, k + 1));
      EXPECT_EQ(binomial_sum_closed(k, n, k), binom(n + 1, k + 1));
    }
  }
}

TEST(BinomialSumTest, ShiftedSum) {
  // sum_{i=0}^{n} C(i+s, k) = C(n+s+1, k+1) - C(s, k+1)
  for (std::int64_t s = 0; s <= 6; ++s) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      for (std::int64_t k = 0; k <= 4; ++k) {
        const BigInt direct =
            oracle::direct_sum<BigInt>(0, n, [&](std::int64_t i) { return oracle::factorial_binom(i + s, k); });
        EXPECT_EQ(binomial_sum_closed(s, n + s, k), direct);
      }
    }
  }
}

TEST(RepeatedBinomialSumTest, Examples) {
  EXPECT_EQ(repeated_binomial_sum_closed(2, 1, 2, 1), 4);
  EXPECT_EQ(repeated_binomial_sum_closed(1, 2, 5, 2), binomial_sum_closed(2, 5, 2));
  EXPECT_EQ(repeated_binomial_sum_closed(2, 0, 2, 1), 4);
  EXPECT_EQ(repeated_binomial_sum_closed(2, 0, 2, 1), binom(4, 3));
  EXPECT_THROW(repeated_binomial_sum_closed(0, 1, 2, 1), std::domain_error);
  EXPECT_THROW(repeated_binomial_sum_closed(2, 3, 2, 1), std::domain_error);
}

TEST(RepeatedBinomialSumTest, BothIndexingsMatchNestedLoops) {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (std::int64_t n = 0; n <= 12; ++n) {
        for (std::int64_t q = 0; q <= n; ++q) {
          const BigInt nested = nested_binom(m, q, n, k);
          EXPECT_EQ(repeated_binomial_sum_closed(m, q, n, k), nested) << m << k << q << n;
          EXPECT_EQ(repeated_binomial_sum_closed_alt(m, q, n, k), nested) << m << k << q << n;
        }
      }
    }
  }
}

TEST(OnesRepeatedSumTest, Examples) {
  EXPECT_EQ(ones_repeated_sum_closed(3, 1, 10), 220);
  EXPECT_EQ(ones_repeated_sum_closed(4, 1, 10), 715);
  for (std::int64_t m = 1; m <= 8; ++m) EXPECT_EQ(ones_repeated_sum_closed(m, 5, 5), 1);
}

TEST(OnesRepeatedSumTest, FromOneAndFromZero) {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(ones_repeated_sum_closed(m, 1, n), binom(n + m - 1, m));
      EXPECT_EQ(ones_repeated_sum_closed(m, 1, n), nested_ones(m, 1, n));
      EXPECT_EQ(ones_repeated_sum_closed(m, 0, n), binom(n + m, m));
      EXPECT_EQ(ones_repeated_sum_closed(m, 0, n), nested_ones(m, 0, n));
    }
  }
}

TEST(ProductSumTest, Examples) {
  EXPECT_EQ(product_sum_closed(2, 1, 2), 3);
  EXPECT_EQ(product_sum_closed(3, 2, 4), 25);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 0; n <= 8; ++n) EXPECT_EQ(product_sum_closed(m, 0, n), 0);
  }
}

TEST(ProductSumTest, BothPrintedFormsMatchDirectProducts) {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (std::int64_t q = 0; q <= n; ++q) {
        const BigInt first = oracle::direct_sum<BigInt>(1, m, [&](std::int64_t j) -> BigInt {
          return oracle::factorial_binom(q - 1 + j, j) * oracle::factorial_binom(n - q + m - j, m - j);
        });
        const BigInt second = oracle::direct_sum<BigInt>(1, m, [&](std::int64_t j) -> BigInt {
          return oracle::factorial_binom(q - 1 + j, q - 1) * oracle::factorial_binom(n - q + m - j, n - q);
        });
        EXPECT_EQ(product_sum_closed(m, q, n), first);
        EXPECT_EQ(product_sum_closed(m, q, n), second);
      }
    }
  }
}

TEST(BinomAsOnesSumTest, Examples) {
  EXPECT_EQ(binom_as_ones_sum(5, 2), 10);
  EXPECT_EQ(binom_as_ones_sum(5, 2), nested_ones(2, 1, 4));
  EXPECT_EQ(binom_as_ones_sum(13, 4), 715);
  for (std::int64_t n = 1; n <= 10; ++n) EXPECT_EQ(binom_as_ones_sum(n, n), 1);
  EXPECT_THROW(binom_as_ones_sum(3, 4), std::domain_error);
  EXPECT_THROW(binom_as_ones_sum(3, 0), std::domain_error);
}

TEST(BinomAsOnesSumTest, BothRangesOfOnes) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      EXPECT_EQ(binom_as_ones_sum(n, k), nested_ones(k, 1, n - k + 1));
      EXPECT_EQ(binom_as_ones_sum(n, k), nested_ones(k, 0, n - k));
    }
  }
}

}  // namespace
}  // namespace repsum
