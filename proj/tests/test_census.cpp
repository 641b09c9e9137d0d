#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "artinlab/artin.hpp"
#include "artinlab/census.hpp"
#include "artinlab/io.hpp"

using namespace artinlab;

namespace {

struct Lcg {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 11;
  }
};

const MultTables& mult_1e6() {
  static const MultTables t = table_mult(sieve_spf(1000000));
  return t;
}

}  // namespace

TEST_CASE("level set examples and partition") {
  const MultTables& mult = mult_1e6();

  auto rows100 = level_set_counts(100, mult);
  CHECK(rows100[0].count == 1);   // A_0 = {1}
  CHECK(rows100[1].count == 25);  // pi(100)

  auto rows30 = level_set_counts(30, mult);
  CHECK(rows30[2].count == 10);  // 4,6,9,10,14,15,21,22,25,26

  for (uint64_t y : {100ull, 10000ull, 1000000ull}) {
    auto rows = level_set_counts(y, mult);
    uint64_t total = 0;
    for (const auto& s : rows) total += s.count;
    CHECK(total == y);  // every n <= y has exactly one Omega value
  }

  // finite-scale witness of the lower bound: count >= 0.1 * y/(2^w log y)
  auto rows = level_set_counts(1000000, mult);
  for (const auto& s : rows) {
    if (s.w == 0) continue;
    CHECK(double(s.count) >= 0.1 * s.lower_ref);
  }
}

TEST_CASE("f_lambda examples") {
  const MultTables& mult = mult_1e6();
  CHECK(f_lambda(100, 3.0, mult) == 6);  // {32, 48, 64, 72, 80, 96}
  CHECK(f_lambda(100, 0.0, mult) == 99);  // all n >= 2
  CHECK(f_lambda(500, 1.0, mult) >= f_lambda(500, 2.0, mult));
  CHECK(f_lambda(500, 2.0, mult) >= f_lambda(500, 3.0, mult));
  CHECK_THROWS_AS(f_lambda(15, 3.0, mult), std::invalid_argument);
}

TEST_CASE("t_k_bruteforce examples") {
  const MultTables& mult = mult_1e6();

  TkResult diag = t_k_bruteforce(1, 2, 30, mult);
  CHECK(diag.value == 10);  // k = 1 forces a_1 = b_1

  CHECK(t_k_bruteforce(2, 1, 30, mult).value == 190);  // 2s^2 - s with s = 10
  CHECK(t_k_bruteforce(2, 1, 10, mult).value == 28);   // s = 4

  // multinomial bound holds on every computed instance with w >= 1
  for (uint32_t k : {1u, 2u, 3u}) {
    for (uint32_t w : {1u, 2u, 3u}) {
      TkResult r = t_k_bruteforce(k, w, 40, mult);
      CHECK(double(r.value) <= r.bound);
    }
  }

  CHECK_THROWS_AS(t_k_bruteforce(9, 1, 1000000, mult, 100000000), BudgetError);
}

TEST_CASE("large sieve ratio stays below one") {
  const MultTables& mult = mult_1e6();
  CHECK(large_sieve_check(1, 1, 30, 10, mult) <= 1.0);
  CHECK(large_sieve_check(2, 1, 50, 20, mult) <= 1.0);
  CHECK(large_sieve_check(1, 2, 40, 20, mult) <= 1.0);
  CHECK(large_sieve_check(2, 2, 60, 30, mult) <= 1.0);
  CHECK(large_sieve_check(1, 9, 50, 30, mult) == 0.0);  // A_9(30) empty
  CHECK_THROWS_AS(large_sieve_check(1, 1, 101, 10, mult), BudgetError);
}

TEST_CASE("k selection satisfies the defining inequalities") {
  using u128 = unsigned __int128;
  Lcg rng;
  for (int i = 0; i < 1000; ++i) {
    uint64_t x = 16 + rng.next() % 1000000;
    uint64_t y = 2 + rng.next() % (x - 1);
    uint32_t k = k_of_xy(x, y);
    u128 x2 = u128(x) * x;
    u128 yk = 1;
    for (uint32_t j = 0; j < k; ++j) yk *= y;
    REQUIRE(yk < x2);
    REQUIRE(x2 <= yk * y);
    // consistency with the asymptotic shape k = 2 log x / log y + O(1)
    double approx = 2.0 * std::log(double(x)) / std::log(double(y));
    REQUIRE(std::abs(double(k) - approx) <= 1.0 + 1e-9);
  }
}

TEST_CASE("lambda_of examples") {
  LambdaChoice lc = lambda_of(10.0, 1e6, 1e3);
  CHECK(lc.lambda == doctest::Approx(80.7242).epsilon(1e-4));
  CHECK_FALSE(lc.range_y_ok);  // y = 10^3 is far below the admissible range

  // algebraic identity at x = y
  double x = 12345.0;
  LambdaChoice at_xy = lambda_of(10.0, x, x);
  double expect = 32.0 / std::log(2.0) * (std::log(std::log(x)) + std::log(2.0)) /
                      std::log(std::log(x)) +
                  1.0 / std::log(2.0);
  CHECK(at_xy.lambda == doctest::Approx(expect));

  // lambda below 3 flags range_c
  LambdaChoice small = lambda_of(10.0, 16.0, 1e9);
  if (small.lambda < 3.0) CHECK_FALSE(small.range_c_ok);

  CHECK_THROWS_AS(lambda_of(10.0, 8.0, 100.0), std::invalid_argument);
}

TEST_CASE("charsum census: monotone counts and delta = 0 convention") {
  std::vector<double> thresholds{0.0, 0.01, 0.05, 0.2, 0.5, 1.0};
  CensusResult r = charsum_census(30, 10, thresholds, 3.0, 2);
  REQUIRE(r.rows.size() == 28);
  // counts nonincreasing along the increasing threshold list
  for (size_t i = 1; i < r.exceed_counts.size(); ++i) {
    CHECK(r.exceed_counts[i] <= r.exceed_counts[i - 1]);
  }
  // delta = 0 counts exactly the moduli with primitive characters
  uint64_t expect = 0;
  for (uint64_t q = 3; q <= 30; ++q) {
    if (q % 4 != 2) ++expect;
  }
  CHECK(r.exceed_counts[0] == expect);
  // delta = 1 requires every term of some primitive sum in phase: none here
  CHECK(r.exceed_counts.back() == 0);
  // flagged rows carry no exceedances
  for (const auto& row : r.rows) {
    if (row.q % 4 == 2) {
      CHECK(row.num_primitive == 0);
      for (uint8_t e : row.exceeds) CHECK(e == 0);
    }
  }
  CHECK_THROWS_AS(charsum_census(200000, 10, thresholds, 3.0, 1), BudgetError);
}

TEST_CASE("census parallel equals serial reference and is thread-deterministic") {
  std::vector<double> thresholds{0.0, 0.1, 0.9};
  CensusResult par1 = charsum_census(60, 30, thresholds, 3.0, 1);
  CensusResult par2 = charsum_census(60, 30, thresholds, 3.0, 2);
  CensusResult ref = charsum_census_serial(60, 30, thresholds, 3.0);

  // identical bytes across thread counts
  CHECK(census_csv(par1) == census_csv(par2));

  // numeric agreement with the naive reference route
  REQUIRE(par1.rows.size() == ref.rows.size());
  for (size_t i = 0; i < par1.rows.size(); ++i) {
    REQUIRE(par1.rows[i].num_primitive == ref.rows[i].num_primitive);
    REQUIRE(std::abs(par1.rows[i].max_abs - ref.rows[i].max_abs) < 1e-6);
  }
  CHECK(par1.exceed_counts == ref.exceed_counts);
}

TEST_CASE("exceptional set against a fully naive double loop") {
  const MultTables& mult = mult_1e6();

  CHECK(exceptional_set(1, 50, 30, 1.5, mult).empty());  // delta > 1 is unreachable

  // delta = 0 with a nonempty level set: every census modulus qualifies
  auto all = exceptional_set(1, 50, 30, 0.0, mult);
  uint64_t expect = 0;
  for (uint64_t q = 3; q <= 50; ++q) {
    if (q % 4 != 2) ++expect;
  }
  CHECK(all.size() == expect);

  // naive oracle: direct enumeration over primitive characters and elements
  auto a_set = omega_level_set(30, 1, mult);
  std::vector<uint64_t> naive;
  for (uint64_t q = 3; q <= 50; ++q) {
    if (q % 4 == 2) continue;
    UnitGroup g(q);
    double best = 0.0;
    for (const auto& chi : enumerate_primitive(g)) {
      std::complex<double> s = 0.0;
      for (uint64_t a : a_set) s += char_value(g, chi, int64_t(a));
      best = std::max(best, std::abs(s));
    }
    if (best >= 0.9 * double(a_set.size())) naive.push_back(q);
  }
  CHECK(exceptional_set(1, 50, 30, 0.9, mult) == naive);
}

TEST_CASE("moment examples and kernel agreement") {
  PrimeTable primes = sieve_primes(2000);
  SpfTable spf = sieve_spf(2000);

  MomentReport small = moments(10, 2, 10.0, 1000000, primes, spf, 2);
  CHECK(small.first_moment == 7);  // N_1 + N_-1 + N_2 + N_-2

  MomentReport zero = moments(50, 0, 10.0, 1000000, primes, spf, 1);
  CHECK(zero.first_moment == 0);  // only a = 0

  MomentReport fast1 = moments(2000, 150, 10.0, 1000000, primes, spf, 1);
  MomentReport fast2 = moments(2000, 150, 10.0, 1000000, primes, spf, 2);
  MomentReport ref = moments_serial_reference(2000, 150, 10.0, 1000000, primes, spf);
  CHECK(fast1.first_moment == ref.first_moment);
  CHECK(fast2.first_moment == ref.first_moment);
  CHECK(fast1.second_central == doctest::Approx(ref.second_central));
  CHECK(moments_csv(fast1) == moments_csv(fast2));  // byte-determinism

  CHECK_THROWS_AS(moments(2000, 2000000000ull, 10.0, 1000000, primes, spf, 1), BudgetError);
}

TEST_CASE("count_na_batch equals singles and the serial reference") {
  PrimeTable primes = sieve_primes(1000);
  SpfTable spf = sieve_spf(1000);
  auto batch = count_na_batch(-15, 15, 1000, primes, spf, 2);
  auto ref = count_na_batch_serial(-15, 15, 1000, primes, spf);
  REQUIRE(batch == ref);
  for (int64_t a = -15; a <= 15; ++a) {
    REQUIRE(batch[size_t(a + 15)] == count_na(a, 1000, primes, spf));
  }
}

TEST_CASE("phi_ratio_sum examples") {
  PrimeTable primes = sieve_primes(1000000);
  SpfTable spf = sieve_spf(1000000);
  CHECK(phi_ratio_sum(10, primes, spf) == doctest::Approx(1.0 / 2 + 1.0 / 3 + 2.0 / 5 + 2.0 / 7));
  CHECK(phi_ratio_sum(2, primes, spf) == doctest::Approx(0.5));

  double full = phi_ratio_sum(1000000, primes, spf);
  double a_const = artin_constant(1000000).value;
  CHECK(std::abs(full / (a_const * double(primes.pi())) - 1.0) < 0.01);
}

TEST_CASE("titchmarsh examples") {
  PrimeTable primes = sieve_primes(1000000);
  const MultTables& mult = mult_1e6();
  CHECK(titchmarsh_sum(100, primes, mult).sum == 115);
  CHECK(titchmarsh_sum(2, primes, mult).sum == 1);  // omega(1) = 0
  for (uint64_t x : {1000ull, 10000ull, 100000ull, 1000000ull}) {
    CHECK(titchmarsh_sum(x, primes, mult).ratio <= 3.0);
  }
}
