#include "repsum/identities.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>

#include "repsum/binomial.hpp"
#include "repsum/binomial_sums.hpp"
#include "repsum/difference.hpp"
#include "repsum/harmonic.hpp"
#include "repsum/oracle/brute_force.hpp"
#include "repsum/reduction.hpp"

namespace repsum {

namespace {

using Sides = std::pair<Rational, Rational>;

struct Case {
  IdentityParams params;
  std::function<Sides()> eval;
};

using CaseBuilder = std::vector<Case> (*)(const IdentityGrid&);

// Sequences shared by the sweeps over arbitrary a_N. Index 0 is included so
// that q = 0 grids are covered.
constexpr std::int64_t kSequencePool = 10;

std::vector<Sequence> sequence_pool(const IdentityGrid& g) {
  std::mt19937_64 rng(g.seed);
  std::vector<Sequence> pool;
  for (std::int64_t s = 0; s < kSequencePool; ++s) {
    pool.push_back(oracle::random_sequence(rng, 0, g.max_n + 2));
  }
  return pool;
}

std::vector<Case> t2_1(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t k = 0; k <= g.max_k; ++k)
    for (std::int64_t n = 0; n <= g.max_n; ++n)
      for (std::int64_t q = 0; q <= n; ++q)
        cases.push_back({{{"k", k}, {"q", q}, {"n", n}}, [=] {
                           return Sides{Rational(binomial_sum_closed(q, n, k)),
                                        oracle::direct_sum<Rational>(q, n, [&](std::int64_t i) {
                                          return oracle::factorial_binom(i, k);
                                        })};
                         }});
  return cases;
}

std::vector<Case> t2_2(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t m = 1; m <= g.max_m; ++m)
    for (std::int64_t k = 0; k <= g.max_k; ++k)
      for (std::int64_t n = 0; n <= g.max_n; ++n)
        for (std::int64_t q = 0; q <= n; ++q)
          for (std::int64_t form = 1; form <= 2; ++form)
            cases.push_back({{{"m", m}, {"k", k}, {"q", q}, {"n", n}, {"form", form}}, [=] {
                               const BigInt closed = form == 1
                                                         ? repeated_binomial_sum_closed(m, q, n, k)
                                                         : repeated_binomial_sum_closed_alt(m, q, n, k);
                               return Sides{Rational(closed),
                                            oracle::nested_sum<Rational>(m, q, n, [&](std::int64_t i) {
                                              return oracle::factorial_binom(i, k);
                                            })};
                             }});
  return cases;
}

std::vector<Case> c2_5(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t m = 1; m <= g.max_m; ++m)
    for (std::int64_t n = 0; n <= g.max_n; ++n)
      for (std::int64_t q = 0; q <= n; ++q)
        for (std::int64_t form = 1; form <= 2; ++form)
          cases.push_back({{{"m", m}, {"q", q}, {"n", n}, {"form", form}}, [=] {
                             const BigInt direct = oracle::direct_sum<BigInt>(1, m, [&](std::int64_t j) -> BigInt {
                               if (form == 1) {
                                 return oracle::factorial_binom(q - 1 + j, j) *
                                        oracle::factorial_binom(n - q + m - j, m - j);
                               }
                               return oracle::factorial_binom(q - 1 + j, q - 1) *
                                      oracle::factorial_binom(n - q + m - j, n - q);
                             });
                             return Sides{Rational(product_sum_closed(m, q, n)), Rational(direct)};
                           }});
  return cases;
}

std::vector<Case> t3_1(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t m = 1; m <= g.max_m; ++m)
    for (std::int64_t q = 0; q <= 1; ++q)
      for (std::int64_t n = q; n <= g.max_n; ++n)
        for (std::int64_t form = 1; form <= 2; ++form)
          cases.push_back({{{"m", m}, {"q", q}, {"n", n}, {"form", form}}, [=] {
                             const BigInt closed = ones_repeated_sum_closed(m, q, n);
                             if (form == 2) {
                               // C(n+m-1, m) from 1, C(n+m, m) from 0.
                               return Sides{Rational(closed), Rational(oracle::factorial_binom(n + m - q, m))};
                             }
                             return Sides{Rational(closed),
                                          Rational(oracle::nested_sum<BigInt>(
                                              m, q, n, [](std::int64_t) { return BigInt(1); }))};
                           }});
  return cases;
}

std::vector<Case> t3_3(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t n = 1; n <= g.max_n; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      for (std::int64_t form = 1; form <= 2; ++form)
        cases.push_back({{{"n", n}, {"k", k}, {"form", form}}, [=] {
                           const auto one = [](std::int64_t) { return BigInt(1); };
                           const BigInt nested = form == 1 ? oracle::nested_sum<BigInt>(k, 1, n - k + 1, one)
                                                           : oracle::nested_sum<BigInt>(k, 0, n - k, one);
                           return Sides{Rational(binom_as_ones_sum(n, k)), Rational(nested)};
                         }});
  return cases;
}

const std::vector<Rational>& sample_deltas() {
  static const std::vector<Rational> deltas{Rational(1), Rational(-2), make_rational(3, 7)};
  return deltas;
}

std::vector<Case> t3_5(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto& deltas = sample_deltas();
  for (std::int64_t m = 0; m <= g.max_m; ++m)
    for (std::size_t d = 0; d < deltas.size(); ++d)
      for (std::int64_t n = 1; n <= g.max_n; ++n)
        cases.push_back({{{"m", m}, {"delta", static_cast<std::int64_t>(d)}, {"n", n}}, [=] {
                           const Rational& delta = sample_deltas()[d];
                           const Sequence built = oracle::cumulative_repeated_sequence(m, delta, n);
                           return Sides{repeated_sequence_term({m, delta}, n), built.at(n)};
                         }});
  return cases;
}

std::vector<Case> t3_6(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto& deltas = sample_deltas();
  for (std::int64_t m = 0; m <= g.max_m; ++m)
    for (std::int64_t k = 1; k <= g.max_m; ++k)
      for (std::size_t d = 0; d < deltas.size(); ++d)
        for (std::int64_t n = 1; n <= g.max_n; ++n)
          cases.push_back({{{"m", m}, {"k", k}, {"delta", static_cast<std::int64_t>(d)}, {"n", n}}, [=] {
                             const Rational& delta = sample_deltas()[d];
                             const Sequence terms = oracle::cumulative_repeated_sequence(m, delta, n);
                             return Sides{repeated_sequence_repsum({m, delta}, k, n),
                                          oracle::nested_sum<Rational>(
                                              k, 1, n, [&](std::int64_t i) { return terms.at(i); })};
                           }});
  return cases;
}

Rational binomial_harmonic_term(std::int64_t m, std::int64_t big_n) {
  return Rational(oracle::factorial_binom(big_n + m, m)) * oracle::harmonic(1 + m, big_n + m);
}

std::vector<Case> t4_1(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t m = 0; m <= g.max_m; ++m)
    for (std::int64_t n = 0; n <= g.max_n; ++n)
      for (std::int64_t p = 0; p <= n; ++p)
        cases.push_back({{{"m", m}, {"p", p}, {"n", n}}, [=] {
                           return Sides{binomial_harmonic_closed(m, p, n),
                                        oracle::direct_sum<Rational>(p, n, [&](std::int64_t big_n) {
                                          return binomial_harmonic_term(m, big_n);
                                        })};
                         }});
  return cases;
}

std::vector<Case> t4_2(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t k = 1; k <= g.max_k; ++k)
    for (std::int64_t m = 0; m <= g.max_m; ++m)
      for (std::int64_t n = 0; n <= g.max_n; ++n)
        for (std::int64_t p = 0; p <= n; ++p)
          cases.push_back({{{"k", k}, {"m", m}, {"p", p}, {"n", n}}, [=] {
                             return Sides{repeated_binomial_harmonic_closed(k, m, p, n),
                                          oracle::nested_sum<Rational>(k, p, n, [&](std::int64_t big_n) {
                                            return binomial_harmonic_term(m, big_n);
                                          })};
                           }});
  return cases;
}

Sequence reciprocal_sequence(std::int64_t length) {
  std::vector<Rational> v;
  for (std::int64_t i = 1; i <= length; ++i) v.push_back(make_rational(1, i));
  return Sequence(1, std::move(v));
}

std::vector<Case> c4_3(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto inv = std::make_shared<Sequence>(reciprocal_sequence(g.max_n));
  for (std::int64_t m = 0; m <= g.max_m; ++m)
    for (std::int64_t n = 1; n <= g.max_n; ++n)
      cases.push_back({{{"order", m + 1}, {"n", n}}, [=] {
                         return Sides{repeated_harmonic_closed(m + 1, n),
                                      oracle::prefix_pass_repeated_sum(*inv, m + 1, 1, n)};
                       }});
  return cases;
}

std::vector<Case> t5_1(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto pool = std::make_shared<std::vector<Sequence>>(sequence_pool(g));
  for (std::int64_t s = 0; s < kSequencePool; ++s)
    for (std::int64_t m = 1; m <= g.max_m; ++m)
      for (std::int64_t n = 0; n <= g.max_n; ++n)
        for (std::int64_t q = 0; q <= n; ++q)
          cases.push_back({{{"seq", s}, {"m", m}, {"q", q}, {"n", n}}, [=] {
                             const Sequence& a = (*pool)[static_cast<std::size_t>(s)];
                             return Sides{reduce_repeated_sum(a, {m, q, n}).value,
                                          oracle::nested_sum<Rational>(
                                              m, q, n, [&](std::int64_t i) { return a.at(i); })};
                           }});
  return cases;
}

std::vector<Case> t5_2(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t order = 1; order <= g.max_m; ++order)
    for (std::int64_t n = 1; n <= g.max_n; ++n)
      cases.push_back({{{"order", order}, {"n", n}}, [=] {
                         return Sides{repeated_harmonic_closed(order, n),
                                      oracle::nested_sum<Rational>(
                                          order, 1, n, [](std::int64_t i) { return make_rational(1, i); })};
                       }});
  return cases;
}

std::vector<Case> t5_3(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t n = 1; n <= g.max_n; ++n)
    for (std::int64_t m = 0; m <= g.max_m; ++m)
      cases.push_back({{{"n", n}, {"m", m}}, [=] {
                         const auto sides = harmonic_identity_t53(n, m);
                         return Sides{sides.lhs, sides.rhs};
                       }});
  return cases;
}

std::vector<Case> t5_4(const IdentityGrid& g) {
  std::vector<Case> cases;
  for (std::int64_t n = 1; n <= g.max_n; ++n)
    cases.push_back({{{"n", n}}, [=] {
                       const auto sides = harmonic_identity_t54(n);
                       return Sides{sides.lhs, sides.rhs};
                     }});
  return cases;
}

Rational binomial_sequence_oracle(const Sequence& a, std::int64_t k, std::int64_t w, std::int64_t q,
                                  std::int64_t n) {
  return oracle::nested_pair_sum<Rational>(k, q, n, [&](std::int64_t inner, std::int64_t outer) {
    return Rational(oracle::factorial_binom(outer - inner + w, w)) * a.at(inner);
  });
}

std::vector<Case> t5_5(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto pool = std::make_shared<std::vector<Sequence>>(sequence_pool(g));
  for (std::int64_t s = 0; s < kSequencePool; ++s)
    for (std::int64_t m = 1; m <= g.max_m; ++m)
      for (std::int64_t n = 0; n <= g.max_n; ++n)
        for (std::int64_t q = 0; q <= n; ++q)
          for (std::int64_t form = 1; form <= 2; ++form)
            cases.push_back({{{"seq", s}, {"m", m}, {"q", q}, {"n", n}, {"form", form}}, [=] {
                               const Sequence& a = (*pool)[static_cast<std::size_t>(s)];
                               const Rational reduced = reduce_binomial_sequence_sum(a, 2, m - 1, q, n);
                               if (form == 2) {
                                 // Single sum with weights C((n-N)+m, m), written out directly.
                                 return Sides{reduced, oracle::direct_sum<Rational>(q, n, [&](std::int64_t big_n) {
                                                return Rational(oracle::factorial_binom(n - big_n + m, m)) *
                                                       a.at(big_n);
                                              })};
                               }
                               return Sides{reduced, binomial_sequence_oracle(a, 2, m - 1, q, n)};
                             }});
  return cases;
}

std::vector<Case> t5_6(const IdentityGrid& g) {
  std::vector<Case> cases;
  const auto pool = std::make_shared<std::vector<Sequence>>(sequence_pool(g));
  for (std::int64_t s = 0; s < kSequencePool; ++s)
    for (std::int64_t k = 1; k <= g.max_k; ++k)
      for (std::int64_t w = 0; w <= g.max_m; ++w)
        for (std::int64_t n = 0; n <= g.max_n; ++n)
          for (std::int64_t q = 0; q <= n; ++q)
            cases.push_back({{{"seq", s}, {"k", k}, {"w", w}, {"q", q}, {"n", n}}, [=] {
                               const Sequence& a = (*pool)[static_cast<std::size_t>(s)];
                               return Sides{reduce_binomial_sequence_sum(a, k, w, q, n),
                                            binomial_sequence_oracle(a, k, w, q, n)};
                             }});
  return cases;
}

std::vector<Case> variation(const IdentityGrid& g, bool partial) {
  std::vector<Case> cases;
  const auto pool = std::make_shared<std::vector<Sequence>>(sequence_pool(g));
  for (std::int64_t s = 0; s < kSequencePool; ++s)
    for (std::int64_t m = 1; m <= g.max_m; ++m)
      for (std::int64_t p = partial ? 1 : 0; p <= (partial ? m : 0); ++p)
        for (std::int64_t n = 0; n <= g.max_n; ++n)
          for (std::int64_t q = 0; q <= n; ++q) {
            IdentityParams params{{"seq", s}, {"m", m}, {"q", q}, {"n", n}};
            if (partial) params.emplace_back("p", p);
            cases.push_back({std::move(params), [=] {
                               const Sequence& a = (*pool)[static_cast<std::size_t>(s)];
                               const Rational updated =
                                   partial ? variation_partial(a, {m, q, n}, p) : variation_full(a, {m, q, n});
                               return Sides{updated, oracle::nested_sum<Rational>(m, q, n + 1, [&](std::int64_t i) {
                                              return a.at(i);
                                            })};
                             }});
          }
  return cases;
}

std::vector<Case> var1(const IdentityGrid& g) { return variation(g, false); }
std::vector<Case> var2(const IdentityGrid& g) { return variation(g, true); }

struct Entry {
  IdentityInfo info;
  CaseBuilder build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"T2.1", "sum of binomial coefficients", {12, 0, 4}}, t2_1},
      {{"T2.2", "repeated sum of binomial coefficients, both indexings", {12, 4, 4}}, t2_2},
      {{"C2.5", "product sum of binomial coefficients, both forms", {12, 4, 0}}, c2_5},
      {{"T3.1", "repeated sums of ones", {12, 4, 0}}, t3_1},
      {{"T3.3", "binomial coefficient as repeated sum of ones", {12, 0, 0}}, t3_3},
      {{"T3.5", "repeated sequence terms", {15, 6, 0}}, t3_5},
      {{"T3.6", "repeated sums of repeated sequences", {10, 3, 0}}, t3_6},
      {{"T4.1", "binomial-harmonic sum", {10, 3, 0}}, t4_1},
      {{"T4.2", "repeated binomial-harmonic sum", {10, 3, 3}}, t4_2},
      {{"C4.3", "repeated harmonic sum via shifted harmonic range", {100, 5, 0}}, c4_3},
      {{"T5.1", "reduction of repeated sums", {12, 5, 0}}, t5_1},
      {{"T5.2", "repeated harmonic sum vs nested loops", {12, 4, 0}}, t5_2},
      {{"T5.3", "binomial-ratio harmonic identity", {50, 10, 0}}, t5_3},
      {{"T5.4", "symmetric reciprocal-product harmonic identity", {200, 0, 0}}, t5_4},
      {{"T5.5", "simple binomial-sequence sum", {10, 4, 0}}, t5_5},
      {{"T5.6", "repeated binomial-sequence sum", {10, 3, 3}}, t5_6},
      {{"VAR1", "full variation formula", {12, 5, 0}}, var1},
      {{"VAR2", "partial variation formula", {12, 5, 0}}, var2},
  };
  return table;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const IdentityInfo* find_identity(std::string_view id) {
  const auto& reg = identity_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const IdentityInfo& i) { return i.id == id; });
  return it == reg.end() ? nullptr : &*it;
}

IdentityReport run_identity(std::string_view id, std::optional<std::int64_t> max_n,
                            std::optional<std::int64_t> max_m, std::optional<std::int64_t> max_k) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");

  IdentityGrid grid = it->info.defaults;
  if (max_n) grid.max_n = *max_n;
  if (max_m) grid.max_m = *max_m;
  if (max_k) grid.max_k = *max_k;
  if (grid.max_n < 0 || grid.max_m < 0 || grid.max_k < 0) {
    throw std::invalid_argument("identity grid bounds must be non-negative");
  }

  const std::vector<Case> cases = it->build(grid);
  const auto count = static_cast<std::int64_t>(cases.size());
  std::vector<std::optional<IdentityFailure>> outcome(cases.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < count; ++c) {
    const Case& cs = cases[static_cast<std::size_t>(c)];
    try {
      const Sides sides = cs.eval();
      if (sides.first != sides.second) {
        outcome[static_cast<std::size_t>(c)] =
            IdentityFailure{cs.params, sides.first.to_string(), sides.second.to_string()};
      }
    } catch (const std::exception& e) {
      outcome[static_cast<std::size_t>(c)] = IdentityFailure{cs.params, std::string("error: ") + e.what(), ""};
    }
  }

  IdentityReport report{std::string(it->info.id), grid, static_cast<std::uint64_t>(count), {}};
  for (auto& o : outcome) {
    if (o) report.failures.push_back(std::move(*o));
  }
  return report;
}

}  // namespace repsum
