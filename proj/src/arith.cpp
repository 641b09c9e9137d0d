#include "artinlab/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace artinlab {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kTrialLimit = 1ull << 21;

// Odd primes <= 2^21, built once on first factor() call.
const std::vector<uint32_t>& trial_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> comp(kTrialLimit + 1, false);
    std::vector<uint32_t> ps;
    for (uint64_t i = 3; i <= kTrialLimit; i += 2) {
      if (!comp[i]) {
        ps.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= kTrialLimit; j += 2 * i) comp[j] = true;
      }
    }
    return ps;
  }();
  return primes;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(u128(a) * b % m);
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Brent's variant of Pollard rho; n must be odd composite, not a prime power
// caught earlier by trial division.
uint64_t pollard_rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  uint64_t c = 1;
  while (true) {
    uint64_t x = 2, d = 1;
    uint64_t saved_x = x;
    int power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = (mul_mod(x, x, n) + c) % n;
      ++lam;
      uint64_t diff = x > saved_x ? x - saved_x : saved_x - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;  // cycle hit n itself; retry with a new increment
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 3.3 * 10^24.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factor(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  if (n >= (1ull << 63)) throw std::invalid_argument("factor: n must be below 2^63");
  Factorization f;
  f.n = n;
  if (n == 1) return f;

  uint64_t m = n;
  auto push = [&](uint64_t p, uint32_t e) { f.factors.emplace_back(p, e); };

  if (m % 2 == 0) {
    uint32_t e = 0;
    while (m % 2 == 0) {
      m /= 2;
      ++e;
    }
    push(2, e);
  }
  for (uint32_t p : trial_primes()) {
    if (uint64_t(p) * p > m) break;
    if (m % p == 0) {
      uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      push(p, e);
    }
  }
  if (m > 1) {
    if (is_prime_u64(m)) {
      push(m, 1);
    } else {
      std::vector<uint64_t> rest;
      factor_rec(m, rest);
      std::sort(rest.begin(), rest.end());
      for (size_t i = 0; i < rest.size();) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        push(rest[i], static_cast<uint32_t>(j - i));
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

MultInvariants mult_invariants(const Factorization& f) {
  MultInvariants r;
  for (const auto& [p, e] : f.factors) {
    r.big_omega += e;
    r.small_omega += 1;
    if (e >= 2) r.mu = 0;
    uint64_t pe = p;
    for (uint32_t i = 1; i < e; ++i) pe *= p;
    r.phi *= pe / p * (p - 1);
  }
  if (r.mu != 0) r.mu = (r.small_omega % 2 == 0) ? 1 : -1;
  return r;
}

SquarefreeDecomposition squarefree_decompose(int64_t a) {
  if (a == 0) throw std::invalid_argument("squarefree_decompose: a must be nonzero");
  SquarefreeDecomposition d;
  d.a = a;
  d.negative = a < 0;
  uint64_t n = d.negative ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
  Factorization f = factor(n);
  d.b = 1;
  d.m = 1;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) d.b *= p;
    for (uint32_t i = 0; i < e / 2; ++i) d.m *= p;
  }
  return d;
}

PowerExponent power_exponent(int64_t a) {
  uint64_t n = a < 0 ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
  if (n <= 1) throw std::invalid_argument("power_exponent: |a| must be at least 2");
  Factorization f = factor(n);
  uint32_t g = 0;
  for (const auto& [p, e] : f.factors) g = std::gcd(g, e);
  if (a < 0) {
    while (g % 2 == 0) g /= 2;
  }
  PowerExponent r;
  r.a = a;
  r.h = g;
  return r;
}

uint64_t mod_pow(int64_t base, uint64_t exp, uint64_t m) {
  if (m < 2) throw std::invalid_argument("mod_pow: modulus must be at least 2");
  int64_t r = base % int64_t(m);
  uint64_t b = r < 0 ? uint64_t(r + int64_t(m)) : uint64_t(r);
  return pow_mod_u64(b, exp, m);
}

}  // namespace artinlab
