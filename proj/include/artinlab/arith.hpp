#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace artinlab {

// Canonical prime-power decomposition n = prod p_i^{e_i}.
// Primes strictly increasing, exponents >= 1; empty list iff n = 1.
struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, uint32_t>> factors;
};

struct MultInvariants {
  int mu = 1;               // Moebius function
  uint64_t phi = 1;         // Euler totient
  uint32_t big_omega = 0;   // prime divisors counted with multiplicity
  uint32_t small_omega = 0; // distinct prime divisors
};

// |a| = b * m^2 with b squarefree; the sign of a is carried separately.
struct SquarefreeDecomposition {
  int64_t a = 1;
  uint64_t b = 1;
  uint64_t m = 1;
  bool negative = false;
};

// h is the largest integer such that a is a perfect h-th power
// (restricted to odd h when a < 0, since odd powers preserve sign).
struct PowerExponent {
  int64_t a = 0;
  uint32_t h = 1;
};

// Trial division by sieved primes up to 2^21, then deterministic
// Miller-Rabin plus Pollard rho for the remaining cofactor.
// Rejects n = 0 and n >= 2^63.
Factorization factor(uint64_t n);

MultInvariants mult_invariants(const Factorization& f);

// Rejects a = 0.
SquarefreeDecomposition squarefree_decompose(int64_t a);

// Rejects |a| <= 1.
PowerExponent power_exponent(int64_t a);

// base^exp mod m via square-and-multiply; double-width intermediate
// products, so any m >= 2 below 2^63 is safe. Negative bases are reduced
// into [0, m). Rejects m < 2.
uint64_t mod_pow(int64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime_u64(uint64_t n);

}  // namespace artinlab
