#include "repsum/harmonic.hpp"

#include <stdexcept>
#include <string>

#include "repsum/binomial.hpp"

namespace repsum {

namespace {

void require_bounds(std::int64_t p, std::int64_t n, std::int64_t m) {
  if (p < 0 || m < 0) throw std::domain_error("binomial-harmonic: p and m must be >= 0");
  if (n < p) throw std::domain_error("binomial-harmonic: upper bound below lower bound");
}

Rational unit_fraction(std::int64_t d) { return make_rational(1, d); }

// sum_{i=1}^{count} 1/((total - i) i)
Rational reciprocal_pair_sum(std::int64_t total, std::int64_t count) {
  Rational s;
  for (std::int64_t i = 1; i <= count; ++i) s += make_rational(1, (total - i) * i);
  return s;
}

}  // namespace

Rational harmonic_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1) throw std::domain_error("harmonic_range: lower index must be >= 1");
  if (hi < lo - 1) {
    throw std::domain_error("harmonic_range: upper index " + std::to_string(hi) +
                            " below lo - 1");
  }
  Rational acc;
  for (std::int64_t i = lo; i <= hi; ++i) acc += unit_fraction(i);
  return acc;
}

Rational binomial_harmonic_closed(std::int64_t m, std::int64_t p, std::int64_t n) {
  require_bounds(p, n, m);
  Rational result = Rational(binom(n + m + 1, m + 1)) * harmonic_range(2 + m, n + m + 1);
  const BigInt tail = binom(p + m, m + 1);
  if (tail != 0) result -= Rational(tail) * harmonic_range(2 + m, p + m);
  return result;
}

Rational repeated_binomial_harmonic_closed(std::int64_t k, std::int64_t m, std::int64_t p,
                                           std::int64_t n) {
  if (k < 1) throw std::domain_error("repeated binomial-harmonic: k must be >= 1");
  require_bounds(p, n, m);
  Rational result = Rational(binom(n + m + k, m + k)) * harmonic_range(1 + m + k, n + m + k);
  for (std::int64_t j = 0; j <= k - 1; ++j) {
    const BigInt coeff = binom(n - p + j, j) * binom(p - 1 + m + k - j, m + k - j);
    // A zero coefficient can pair with a range whose hi is lo - 2 (p = 0).
    if (coeff == 0) continue;
    result -= Rational(coeff) * harmonic_range(1 + m + k - j, p - 1 + m + k - j);
  }
  return result;
}

Rational repeated_harmonic_closed(std::int64_t order, std::int64_t n) {
  if (order < 1) throw std::domain_error("repeated_harmonic: order must be >= 1");
  if (n < 1) throw std::domain_error("repeated_harmonic: n must be >= 1");
  const std::int64_t m = order - 1;
  Rational closed = Rational(binom(n + m, m)) * harmonic_range(1 + m, n + m);

  Rational weighted;
  for (std::int64_t i = 1; i <= n; ++i) {
    weighted += Rational(binom(n + m - i, m)) * unit_fraction(i);
  }
  if (weighted != closed) {
    throw std::logic_error("repeated_harmonic: weighted single sum disagrees with closed form");
  }
  return closed;
}

IdentitySides harmonic_identity_t53(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 0) throw std::domain_error("harmonic identity: requires n >= 1, m >= 0");
  Rational lhs;
  Rational product(1);
  for (std::int64_t i = 1; i <= n; ++i) {
    const Rational ratio(binom(n, i), binom(n + m, i));
    // Running product over k = 0 .. i-1 of (n-k)/(n+m-k).
    product *= make_rational(n - (i - 1), n + m - (i - 1));
    if (ratio != product) {
      throw std::logic_error("harmonic identity: binomial ratio disagrees with product form at i = " +
                             std::to_string(i));
    }
    lhs += ratio * unit_fraction(i);
  }
  return {lhs, harmonic_range(1 + m, n + m)};
}

IdentitySides harmonic_identity_t54(std::int64_t n) {
  if (n < 1) throw std::domain_error("harmonic identity: requires n >= 1");
  const Rational lhs = make_rational(n + 1, 2) * reciprocal_pair_sum(n + 1, n);
  const Rational rhs = harmonic_range(1, n);

  if (n % 2 == 0) {
    const std::int64_t k = n / 2;
    const Rational half = Rational(2 * k + 1) * reciprocal_pair_sum(2 * k + 1, k);
    if (half != rhs) throw std::logic_error("harmonic identity: even half-range form disagrees");
  } else {
    const std::int64_t k = (n + 1) / 2;
    const Rational inv_k = unit_fraction(k);
    const Rational upper = Rational(2 * k) * reciprocal_pair_sum(2 * k, k) - inv_k;
    const Rational lower = Rational(2 * k) * reciprocal_pair_sum(2 * k, k - 1) + inv_k;
    const Rational full = Rational(k) * reciprocal_pair_sum(2 * k, 2 * k - 1);
    if (upper != rhs || lower != rhs || full != rhs) {
      throw std::logic_error("harmonic identity: odd split forms disagree");
    }
  }
  return {lhs, rhs};
}

}  // namespace repsum
