// Acceptance gate: runs each criterion, prints one PASS/FAIL line per
// criterion and exits nonzero if any fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "repsum/binomial.hpp"
#include "repsum/binomial_sums.hpp"
#include "repsum/difference.hpp"
#include "repsum/harmonic.hpp"
#include "repsum/oracle/brute_force.hpp"
#include "repsum/reduction.hpp"

namespace {

using namespace repsum;

// Counts checks and remembers the first mismatch.
class Checker {
 public:
  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& where) {
    ++checks_;
    if (got == want) return;
    if (failures_++ == 0) {
      std::ostringstream os;
      os << where << ": got " << got << ", want " << want;
      first_ = os.str();
    }
  }
  void ok(bool cond, const std::string& where) { eq(cond, true, where); }

  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

std::string at(std::initializer_list<std::int64_t> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

Rational bh_term(std::int64_t m, std::int64_t big_n) {
  return Rational(oracle::factorial_binom(big_n + m, m)) * oracle::harmonic(1 + m, big_n + m);
}

void reference_values(Checker& c) {
  c.eq(repeated_sequence_repsum({1, Rational(1)}, 3, 10), Rational(715), "unity degree 1, order 3, n=10");
  c.eq(repeated_sequence_repsum({2, Rational(1)}, 3, 10), Rational(2002), "unity degree 2, order 3, n=10");

  const auto path = std::filesystem::temp_directory_path() / "repsum_acceptance_ones.txt";
  {
    std::ofstream f(path);
    for (int i = 0; i < 10; ++i) f << "1\n";
  }
  std::ostringstream out, err;
  const int code = cli::run({"repsum", "eval", "-s", path.string(), "-m", "10", "-q", "1", "-n", "10", "--mode", "both"},
                            out, err);
  std::filesystem::remove(path);
  c.eq(code, 0, "eval exit code");
  if (code != 0) return;
  const auto doc = nlohmann::json::parse(out.str());
  c.eq(doc["reports"][0]["method"].get<std::string>(), std::string("naive"), "first report method");
  c.eq(doc["reports"][0]["terms_touched"].get<std::uint64_t>(), 92378u, "naive_terms");
  c.eq(doc["reports"][1]["terms_touched"].get<std::uint64_t>(), 10u, "reduced_terms");
  c.eq(doc["value"].get<std::string>(), std::string("92378"), "value");
}

void reduction_oracle(Checker& c) {
  std::mt19937_64 rng(20240611);
  for (int s = 0; s < 200; ++s) {
    const Sequence a = oracle::random_sequence(rng, 0, 13);
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (std::int64_t n = 0; n <= 12; ++n) {
        for (std::int64_t q = 0; q <= n; ++q) {
          const SumSpec spec{m, q, n};
          const auto naive = naive_repeated_sum(a, spec, {kDefaultNaiveCeiling, true});
          c.eq(reduce_repeated_sum(a, spec).value, naive.value, "seq " + std::to_string(s) + " m,q,n=" + at({m, q, n}));
        }
      }
    }
  }
}

void binomial_forms(Checker& c) {
  const auto ones = [](std::int64_t) { return BigInt(1); };
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t q = 0; q <= n; ++q) {
      for (std::int64_t k = 0; k <= 4; ++k) {
        const auto cb = [k](std::int64_t i) { return oracle::factorial_binom(i, k); };
        c.eq(binomial_sum_closed(q, n, k), oracle::direct_sum<BigInt>(q, n, cb), "binomial sum q,n,k=" + at({q, n, k}));
        for (std::int64_t m = 1; m <= 4; ++m) {
          const BigInt nested = oracle::nested_sum<BigInt>(m, q, n, cb);
          c.eq(repeated_binomial_sum_closed(m, q, n, k), nested, "repeated binomial sum m,q,n,k=" + at({m, q, n, k}));
          c.eq(repeated_binomial_sum_closed_alt(m, q, n, k), nested, "second indexing m,q,n,k=" + at({m, q, n, k}));
        }
      }
      for (std::int64_t m = 1; m <= 4; ++m) {
        const BigInt first = oracle::direct_sum<BigInt>(1, m, [&](std::int64_t j) -> BigInt {
          return oracle::factorial_binom(q - 1 + j, j) * oracle::factorial_binom(n - q + m - j, m - j);
        });
        const BigInt second = oracle::direct_sum<BigInt>(1, m, [&](std::int64_t j) -> BigInt {
          return oracle::factorial_binom(q - 1 + j, q - 1) * oracle::factorial_binom(n - q + m - j, n - q);
        });
        c.eq(product_sum_closed(m, q, n), first, "product sum form 1 m,q,n=" + at({m, q, n}));
        c.eq(product_sum_closed(m, q, n), second, "product sum form 2 m,q,n=" + at({m, q, n}));
        c.eq(ones_repeated_sum_closed(m, q, n), oracle::nested_sum<BigInt>(m, q, n, ones), "ones m,q,n=" + at({m, q, n}));
      }
    }
    for (std::int64_t k = 1; k <= n; ++k) {
      c.eq(binom_as_ones_sum(n, k), oracle::nested_sum<BigInt>(k, 1, n - k + 1, ones), "ones from 1 n,k=" + at({n, k}));
      c.eq(binom_as_ones_sum(n, k), oracle::nested_sum<BigInt>(k, 0, n - k, ones), "ones from 0 n,k=" + at({n, k}));
    }
  }
}

void harmonic_forms(Checker& c) {
  for (std::int64_t m = 0; m <= 3; ++m) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      for (std::int64_t p = 0; p <= n; ++p) {
        const auto term = [m](std::int64_t big_n) { return bh_term(m, big_n); };
        c.eq(binomial_harmonic_closed(m, p, n), oracle::direct_sum<Rational>(p, n, term),
             "binomial-harmonic m,p,n=" + at({m, p, n}));
        for (std::int64_t k = 1; k <= 3; ++k) {
          c.eq(repeated_binomial_harmonic_closed(k, m, p, n), oracle::nested_sum<Rational>(k, p, n, term),
               "repeated binomial-harmonic k,m,p,n=" + at({k, m, p, n}));
        }
      }
    }
  }
  const auto inv = [](std::int64_t i) { return make_rational(1, i); };
  for (std::int64_t order = 1; order <= 4; ++order) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      c.eq(repeated_harmonic_closed(order, n), oracle::nested_sum<Rational>(order, 1, n, inv),
           "repeated harmonic vs nested order,n=" + at({order, n}));
    }
  }
  std::vector<Rational> v;
  for (std::int64_t i = 1; i <= 100; ++i) v.push_back(make_rational(1, i));
  const Sequence reciprocals(1, std::move(v));
  for (std::int64_t m = 0; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= 100; ++n) {
      c.eq(repeated_harmonic_closed(m + 1, n), oracle::prefix_pass_repeated_sum(reciprocals, m + 1, 1, n),
           "repeated harmonic vs running totals m,n=" + at({m, n}));
    }
  }
}

void harmonic_identities(Checker& c) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      Rational lhs;
      for (std::int64_t i = 1; i <= n; ++i) {
        lhs += Rational(oracle::factorial_binom(n, i)) / Rational(oracle::factorial_binom(n + m, i)) / Rational(i);
      }
      const auto sides = harmonic_identity_t53(n, m);
      c.eq(sides.lhs, lhs, "ratio identity lhs n,m=" + at({n, m}));
      c.eq(sides.lhs, oracle::harmonic(1 + m, n + m), "ratio identity n,m=" + at({n, m}));
    }
  }
  const auto recip = [](std::int64_t a, std::int64_t b) { return make_rational(1, a * b); };
  for (std::int64_t n = 1; n <= 200; ++n) {
    const Rational h = oracle::harmonic(1, n);
    const auto sides = harmonic_identity_t54(n);
    c.eq(sides.lhs, h, "reciprocal product n=" + at({n}));
    c.eq(sides.rhs, h, "reciprocal product rhs n=" + at({n}));
    if (n % 2 == 0) {
      const std::int64_t k = n / 2;
      const Rational half = oracle::direct_sum<Rational>(1, k, [&](std::int64_t i) { return recip(2 * k + 1 - i, i); });
      c.eq(Rational(2 * k + 1) * half, h, "even form n=" + at({n}));
    } else {
      const std::int64_t k = (n + 1) / 2;
      const auto t = [&](std::int64_t i) { return recip(2 * k - i, i); };
      c.eq(Rational(2 * k) * oracle::direct_sum<Rational>(1, k, t) - make_rational(1, k), h, "odd form a n=" + at({n}));
      c.eq(Rational(2 * k) * oracle::direct_sum<Rational>(1, k - 1, t) + make_rational(1, k), h, "odd form b n=" + at({n}));
      c.eq(Rational(k) * oracle::direct_sum<Rational>(1, 2 * k - 1, t), h, "odd full form n=" + at({n}));
    }
  }
}

void difference_calculus(Checker& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> len(1, 20);
  for (int s = 0; s < 60; ++s) {
    const Sequence x = oracle::random_sequence(rng, 1, len(rng));
    const DifferenceTable table(x, 6);
    for (std::int64_t m = 0; m <= 6; ++m) {
      for (std::int64_t p = 0; p <= m; ++p) {
        for (std::int64_t n = 1; n <= x.last_index(); ++n) {
          c.eq(difference_explicit(x, m, p, n), table.row(m).at(n), "explicit m,p,n=" + at({m, p, n}));
        }
      }
    }
  }
  const std::vector<Rational> deltas{Rational(1), Rational(-2), make_rational(3, 7)};
  for (std::int64_t m = 0; m <= 6; ++m) {
    for (const auto& delta : deltas) {
      const Sequence x = oracle::cumulative_repeated_sequence(m, delta, 15);
      c.ok(repeated_sequence({m, delta}, 15) == x, "closed terms m=" + at({m}));
      const DifferenceTable table(x, m);
      for (std::int64_t j = 0; j <= m; ++j) {
        for (std::int64_t i = -2; i <= 0; ++i) c.eq(table.row(j).extended(i), Rational(0), "zero extension j=" + at({j}));
        c.eq(table.row(j).at(1), x.at(1), "first term j=" + at({j}));
        if (j >= 1) {
          Rational running;
          for (std::int64_t n = 1; n <= 15; ++n) {
            running += table.row(j).at(n);
            c.eq(running, table.row(j - 1).at(n), "telescoping j,n=" + at({j, n}));
          }
        }
      }
      for (std::int64_t n = 1; n <= 15; ++n) c.eq(table.row(m).at(n), delta, "constant difference m,n=" + at({m, n}));
      for (std::int64_t n = m + 1; n <= 15; ++n) {
        const auto found = detect_repeated_degree(repeated_sequence({m, delta}, n), 6);
        c.ok(found && *found == RepeatedSequenceSpec{m, delta}, "round trip m,n=" + at({m, n}));
      }
    }
  }
}

void variations(Checker& c) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 10; ++s) {
    const Sequence a = oracle::random_sequence(rng, 0, 14);
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (std::int64_t n = 0; n <= 12; ++n) {
        for (std::int64_t q = 0; q <= n; ++q) {
          const SumSpec spec{m, q, n};
          const Rational target = reduce_repeated_sum(a, {m, q, n + 1}).value;
          c.eq(variation_full(a, spec), target, "full m,q,n=" + at({m, q, n}));
          for (std::int64_t p = 1; p <= m; ++p) {
            c.eq(variation_partial(a, spec, p), target, "partial m,q,n,p=" + at({m, q, n, p}));
          }
        }
      }
    }
  }
}

void binomial_sequence_sums(Checker& c) {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 5; ++s) {
    const Sequence a = oracle::random_sequence(rng, 0, 11);
    for (std::int64_t k = 1; k <= 3; ++k) {
      for (std::int64_t w = 0; w <= 3; ++w) {
        for (std::int64_t n = 0; n <= 10; ++n) {
          for (std::int64_t q = 0; q <= n; ++q) {
            c.eq(reduce_binomial_sequence_sum(a, k, w, q, n), naive_binomial_sequence_sum(a, k, w, q, n),
                 "k,w,q,n=" + at({k, w, q, n}));
          }
        }
      }
    }
  }
  const Sequence small(1, {Rational(1), Rational(2)});
  c.eq(naive_binomial_sequence_sum(small, 1, 2, 1, 2), Rational(5), "k=1 convention");
  c.eq(reduce_binomial_sequence_sum(small, 1, 2, 1, 2), Rational(5), "k=1 reduced");
}

void complexity(Checker& c) {
  std::vector<Rational> v;
  for (std::int64_t i = 0; i <= 30; ++i) v.push_back(Rational(i * i - 3));
  const Sequence a(0, std::move(v));
  for (const std::int64_t m : {1, 5, 10, 20}) {
    for (std::int64_t q = 0; q + 9 <= 30; q += 7) {
      c.eq(reduce_repeated_sum(a, {m, q, q + 9}).terms_touched, 10u, "reduced terms m,q=" + at({m, q}));
    }
  }
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t q = 0; q <= 2; ++q) {
      for (std::int64_t d = 0; d <= 12; ++d) {
        const SumSpec spec{m, q, q + d};
        BigInt total = 0;
        for (std::int64_t i = q; i <= q + d; ++i) total += term_multiplicity(i, spec);
        c.eq(total, binom(d + m, m), "multiplicity m,q,d=" + at({m, q, d}));
      }
    }
  }
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"reference values 715, 2002, 92378/10", 1, reference_values},
      {"reduction = literal naive, 200 random sequences", 30, reduction_oracle},
      {"binomial closed forms", 20, binomial_forms},
      {"harmonic closed forms", 30, harmonic_forms},
      {"harmonic identities (ratio, reciprocal product)", 10, harmonic_identities},
      {"difference calculus", 10, difference_calculus},
      {"variation formulas", 10, variations},
      {"binomial-sequence sums", 20, binomial_sequence_sums},
      {"complexity contract", 1e9, complexity},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    Checker c;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && c.failures() == 0 && c.checks() > 0 && secs < cr.budget_s;
    failed += pass ? 0 : 1;
    std::printf("%s [%zu] %s: %llu checks, %llu failures, %.3f s", pass ? "PASS" : "FAIL", i + 1, cr.name,
                static_cast<unsigned long long>(c.checks()), static_cast<unsigned long long>(c.failures()), secs);
    if (cr.budget_s < 1e9) std::printf(" (budget %.0f s)", cr.budget_s);
    std::printf("\n");
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (c.failures() > 0) std::printf("    first failure: %s\n", c.first().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
