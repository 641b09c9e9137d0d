#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <map>
#include <numeric>
#include <set>

#include "artinlab/arith.hpp"
#include "artinlab/dirichlet.hpp"
#include "artinlab/sieve.hpp"

using namespace artinlab;

namespace {

struct Lcg {
  uint64_t s = 0x2545f4914f6cdd1dull;
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 11;
  }
};

// Rebuild a from its exponent tuple: local product of generator powers per
// prime power, then CRT across prime powers.
uint64_t recombine(const UnitGroup& g, const std::vector<uint64_t>& t) {
  uint64_t q = g.modulus();
  if (q == 1) return 0;
  std::map<uint64_t, uint64_t> local;  // prime_power -> value
  const auto& fs = g.factors();
  for (size_t j = 0; j < fs.size(); ++j) {
    uint64_t pk = fs[j].prime_power;
    uint64_t v = mod_pow(int64_t(fs[j].generator), t[j], pk);
    auto [it, fresh] = local.emplace(pk, v);
    if (!fresh) it->second = it->second * v % pk;
  }
  if (q % 4 == 2) local.emplace(2, 1);  // odd units are 1 mod 2
  uint64_t x = 0, mod = 1;
  for (auto [pk, v] : local) {
    uint64_t k = 0;
    while ((x + mod * k) % pk != v % pk) ++k;
    x += mod * k;
    mod *= pk;
  }
  return x % q;
}

const Character& find_order(const std::vector<Character>& chars, uint64_t order) {
  for (const auto& chi : chars) {
    if (chi.order == order) return chi;
  }
  REQUIRE(false);
  return chars.front();
}

}  // namespace

TEST_CASE("unit group structure examples") {
  UnitGroup g7(7);
  REQUIRE(g7.rank() == 1);
  CHECK(g7.factors()[0].order == 6);
  CHECK(g7.factors()[0].generator == 3);  // smallest primitive root mod 7
  CHECK(g7.phi() == 6);

  UnitGroup g8(8);
  REQUIRE(g8.rank() == 2);
  CHECK(g8.factors()[0].order == 2);
  CHECK(g8.factors()[1].order == 2);
  CHECK(g8.factors()[0].generator == 7);
  CHECK(g8.factors()[1].generator == 5);

  UnitGroup g15(15);
  REQUIRE(g15.rank() == 2);
  CHECK(g15.factors()[0].order == 2);  // phi(3)
  CHECK(g15.factors()[1].order == 4);  // phi(5)
  CHECK(g15.phi() == 8);

  CHECK_THROWS_AS(UnitGroup(0), std::invalid_argument);
  CHECK_THROWS_AS(UnitGroup(10'000'001), BudgetError);
}

TEST_CASE("dlog recombines to the original unit") {
  for (uint64_t q : {2ull, 3ull, 4ull, 6ull, 8ull, 9ull, 12ull, 15ull, 16ull, 21ull, 24ull, 30ull,
                     36ull, 45ull, 64ull, 100ull, 120ull, 210ull}) {
    UnitGroup g(q);
    uint64_t phi_count = 0;
    for (uint64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) {
        CHECK_FALSE(g.is_unit(int64_t(a)));
        continue;
      }
      ++phi_count;
      REQUIRE(g.is_unit(int64_t(a)));
      auto t = g.dlog(int64_t(a));
      REQUIRE(recombine(g, t) == a);
    }
    CHECK(phi_count == g.phi());
    uint64_t prod = 1;
    for (const auto& f : g.factors()) prod *= f.order;
    CHECK(prod == g.phi());
  }
}

TEST_CASE("char_value examples") {
  UnitGroup g5(5);
  auto chars = enumerate_characters(g5);
  REQUIRE(chars.size() == 4);

  const Character& quad = find_order(chars, 2);
  CHECK(char_value(g5, quad, 2).real() == doctest::Approx(-1.0));  // Legendre (2/5)
  CHECK(char_value(g5, quad, 2).imag() == doctest::Approx(0.0));
  CHECK(char_value(g5, quad, 4).real() == doctest::Approx(1.0));

  const Character& principal = find_order(chars, 1);
  for (int a : {1, 2, 3, 4}) {
    CHECK(char_value(g5, principal, a).real() == doctest::Approx(1.0));
  }
  CHECK(std::abs(char_value(g5, principal, 5)) == 0.0);
  CHECK(std::abs(char_value(g5, quad, 10)) == 0.0);

  for (const auto& chi : chars) {
    for (int a = 1; a < 5; ++a) {
      CHECK(std::abs(char_value(g5, chi, a)) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("conductor examples") {
  UnitGroup g12(12);
  auto chars12 = enumerate_characters(g12);
  REQUIRE(chars12.size() == 4);
  std::multiset<uint64_t> conds;
  for (const auto& chi : chars12) conds.insert(chi.conductor);
  CHECK(conds == std::multiset<uint64_t>{1, 3, 4, 12});
  CHECK(find_order(chars12, 1).conductor == 1);  // principal

  UnitGroup g7(7);
  for (const auto& chi : enumerate_characters(g7)) {
    CHECK(chi.conductor == (chi.order == 1 ? 1 : 7));
  }

  // order-2 character mod 9: c = 3 on the cyclic group of order 6
  UnitGroup g9(9);
  Character chi9 = make_character(g9, {3});
  CHECK(chi9.order == 2);
  CHECK(chi9.conductor == 3);
  CHECK(conductor_bruteforce(g9, chi9.c) == 3);
}

TEST_CASE("fast conductor equals brute force for all characters, q <= 200") {
  for (uint64_t q = 1; q <= 200; ++q) {
    UnitGroup g(q);
    for (const auto& chi : enumerate_characters(g)) {
      REQUIRE(chi.conductor == conductor_bruteforce(g, chi.c));
      REQUIRE(is_primitive(g, chi.c) == (chi.conductor == q));
      REQUIRE((chi.order == 1) == (chi.conductor == 1));
      REQUIRE(q % chi.conductor == 0);
    }
  }
  // deeper 2-power coverage
  for (uint64_t q : {256ull, 512ull, 1024ull}) {
    UnitGroup g(q);
    for (const auto& chi : enumerate_characters(g)) {
      REQUIRE(chi.conductor == conductor_bruteforce(g, chi.c));
      REQUIRE(is_primitive(g, chi.c) == (chi.conductor == q));
    }
  }
}

TEST_CASE("primitive character counts") {
  CHECK(enumerate_primitive(UnitGroup(5)).size() == 3);   // p - 2
  CHECK(enumerate_primitive(UnitGroup(8)).size() == 2);   // conductors 1,4,8,8
  CHECK(enumerate_primitive(UnitGroup(12)).size() == 1);  // conductors 1,3,4,12
  for (uint64_t q = 1; q <= 150; ++q) {
    UnitGroup g(q);
    CHECK(enumerate_characters(g).size() == g.phi());
    CHECK(enumerate_primitive(g).size() == num_primitive_characters(g));
    if (q > 2 && q % 4 == 2) CHECK(num_primitive_characters(g) == 0);
  }
}

TEST_CASE("order census: phi(t) characters of each order t | p-1") {
  for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 31ull, 61ull, 97ull}) {
    UnitGroup g(p);
    std::map<uint64_t, uint64_t> by_order;
    for (const auto& chi : enumerate_characters(g)) ++by_order[chi.order];
    for (uint64_t t = 1; t <= p - 1; ++t) {
      if ((p - 1) % t != 0) continue;
      CHECK(by_order[t] == mult_invariants(factor(t)).phi);
    }
  }
}

TEST_CASE("multiplicativity chi(ab) = chi(a)chi(b)") {
  Lcg rng;
  for (uint64_t q : {5ull, 8ull, 9ull, 12ull, 45ull, 97ull, 100ull}) {
    UnitGroup g(q);
    auto chars = enumerate_characters(g);
    for (const auto& chi : chars) {
      for (int i = 0; i < 200; ++i) {
        int64_t a = int64_t(rng.next() % (4 * q)) - int64_t(2 * q);
        int64_t b = int64_t(rng.next() % (4 * q)) - int64_t(2 * q);
        std::complex<double> lhs = char_value(g, chi, a * b);
        std::complex<double> rhs = char_value(g, chi, a) * char_value(g, chi, b);
        REQUIRE(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("orthogonality over a full period") {
  for (uint64_t q : {5ull, 8ull, 12ull, 15ull, 36ull}) {
    UnitGroup g(q);
    auto chars = enumerate_characters(g);
    for (const auto& c1 : chars) {
      for (const auto& c2 : chars) {
        std::complex<double> s = 0.0;
        for (uint64_t a = 0; a < q; ++a) {
          s += char_value(g, c1, int64_t(a)) * std::conj(char_value(g, c2, int64_t(a)));
        }
        double expect = (c1.c == c2.c) ? double(g.phi()) : 0.0;
        REQUIRE(std::abs(s - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("char_sum examples") {
  UnitGroup g5(5);
  auto chars5 = enumerate_characters(g5);
  const Character& quad = find_order(chars5, 2);
  CHECK(std::abs(char_sum(g5, quad, 4)) < 1e-12);  // 1 - 1 - 1 + 1

  for (uint64_t q : {5ull, 9ull, 12ull, 40ull}) {
    UnitGroup g(q);
    for (const auto& chi : enumerate_characters(g)) {
      if (chi.order == 1) continue;
      CHECK(std::abs(char_sum(g, chi, q)) < 1e-9);  // orthogonality over a full period
    }
  }

  UnitGroup g12(12);
  auto chars12 = enumerate_characters(g12);
  const Character& p12 = find_order(chars12, 1);
  uint64_t units = 0;
  for (uint64_t a = 1; a <= 7; ++a) {
    if (std::gcd(a, uint64_t(12)) == 1) ++units;
  }
  CHECK(char_sum(g12, p12, 7).real() == doctest::Approx(double(units)));
}

TEST_CASE("char_sum_symmetric identity and examples") {
  // principal mod 3, y = 2: a in {-2,-1,1,2} are all units
  UnitGroup g3(3);
  auto chars3 = enumerate_characters(g3);
  const Character& p3 = find_order(chars3, 1);
  CHECK(char_sum_symmetric(g3, p3, 2).real() == doctest::Approx(4.0));

  for (uint64_t q : {5ull, 7ull, 8ull, 12ull, 15ull}) {
    UnitGroup g(q);
    for (const auto& chi : enumerate_characters(g)) {
      bool odd = std::abs(char_value(g, chi, -1) + 1.0) < 1e-12;
      std::complex<double> sym = char_sum_symmetric(g, chi, 11);
      if (odd) {
        CHECK(std::abs(sym) < 1e-12);
      } else {
        CHECK(std::abs(sym - 2.0 * char_sum(g, chi, 11)) < 1e-12);
      }
      std::complex<double> direct = 0.0;  // summation oracle
      for (int64_t a = -11; a <= 11; ++a) direct += char_value(g, chi, a);
      REQUIRE(std::abs(sym - direct) < 1e-9);
    }
  }
}

TEST_CASE("max_primitive_char_sum examples") {
  UnitGroup g5(5);
  CharSumRecord r = max_primitive_char_sum(g5, 2);
  CHECK(r.num_primitive == 3);
  CHECK(r.max_abs == doctest::Approx(std::sqrt(2.0)));  // |1 + i| for an order-4 character

  CharSumRecord r3 = max_primitive_char_sum(UnitGroup(3), 1);
  CHECK(r3.max_abs == doctest::Approx(1.0));

  CharSumRecord r5full = max_primitive_char_sum(g5, 5);
  CHECK(r5full.max_abs == doctest::Approx(0.0));

  CharSumRecord r6 = max_primitive_char_sum(UnitGroup(6), 3);
  CHECK(r6.num_primitive == 0);  // flagged empty record
  CHECK(r6.max_abs == 0.0);

  CHECK_THROWS_AS(max_primitive_char_sum(UnitGroup(2), 2), std::invalid_argument);
}

TEST_CASE("DFT fast path equals the naive route") {
  for (uint64_t q = 3; q <= 120; ++q) {
    UnitGroup g(q);
    for (uint64_t y : {std::max<uint64_t>(1, q / 4), std::max<uint64_t>(1, q / 2), q}) {
      CharSumRecord fast = max_primitive_char_sum(g, y);
      CharSumRecord slow = max_primitive_char_sum_naive(g, y);
      REQUIRE(fast.num_primitive == slow.num_primitive);
      REQUIRE(std::abs(fast.max_abs - slow.max_abs) < 1e-9);
    }
  }
}

TEST_CASE("large moduli near the budget scale") {
  // prime with a ~10^6-entry dlog table
  UnitGroup gp(999983);
  CHECK(gp.phi() == 999982);
  CHECK(gp.dlog(1)[0] == 0);
  uint64_t g = gp.factors()[0].generator;
  CHECK(gp.dlog(int64_t(g))[0] == 1);
  CHECK(gp.dlog(int64_t(mod_pow(int64_t(g), 12345, 999983)))[0] == 12345);
  CHECK(num_primitive_characters(gp) == 999981);  // p - 2

  // 2^20: the joint (-1, 5) walk at scale
  UnitGroup g2(1 << 20);
  CHECK(g2.phi() == uint64_t(1) << 19);
  CHECK(g2.rank() == 2);
  CHECK(num_primitive_characters(g2) == uint64_t(1) << 18);  // phi(2^k) - phi(2^{k-1})
  auto t5 = g2.dlog(5);
  CHECK(t5[0] == 0);
  CHECK(t5[1] == 1);
  auto tm1 = g2.dlog(-1);
  CHECK(tm1[0] == 1);
  CHECK(tm1[1] == 0);
}

TEST_CASE("Polya-Vinogradov bound on primitive sums, spot check") {
  for (uint64_t q : {5ull, 16ull, 37ull, 81ull, 100ull}) {
    UnitGroup g(q);
    double bound = std::sqrt(double(q)) * std::log(double(q)) + 1.0;
    for (const auto& chi : enumerate_primitive(g)) {
      for (uint64_t y = 1; y <= q; ++y) {
        REQUIRE(std::abs(char_sum(g, chi, y)) <= bound);
      }
    }
  }
}
