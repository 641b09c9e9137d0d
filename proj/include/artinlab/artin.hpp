#pragma once

#include <cstdint>
#include <map>

#include "artinlab/arith.hpp"
#include "artinlab/dirichlet.hpp"
#include "artinlab/sieve.hpp"

namespace artinlab {

// Squarefree-part convention entering the b == 1 (mod 4) test of the density
// formula. AbsoluteValue takes b from |a| (b in N); Signed tests sign(a)*b.
// They differ only for a < 0; both are exposed because the empirical counts
// adjudicate between them.
enum class SquarefreeSign { AbsoluteValue, Signed };

struct ArtinProfile {
  int64_t a = 0;
  uint32_t h = 1;       // power exponent
  uint64_t b = 1;       // squarefree part of |a|
  bool negative = false;
  double density = 0.0;  // conjectural density delta(a)
  bool degenerate = false;  // a in {0, 1, -1} or a perfect square
};

struct EulerProductValue {
  double value = 0.0;
  uint64_t prime_cutoff = 0;
  // The true value lies within [value*exp(-tail_bound), value*exp(tail_bound)];
  // tail_bound = 1/cutoff from sum_{l > P} 1/(l(l-1)) < 1/P.
  double tail_bound = 0.0;
};

// True iff gcd(a, p) = 1 and a^{(p-1)/l} != 1 (mod p) for every prime l | p-1,
// i.e. ord_p(a) = p - 1. fac_pm1 must factor p - 1; p is caller-verified prime.
bool is_primitive_root(int64_t a, uint64_t p, const Factorization& fac_pm1);

// N_a(x) = #{p <= x : a is a primitive root mod p}. Primes dividing a count
// as non-roots. Requires spf coverage of x for factoring p - 1.
uint64_t count_na(int64_t a, uint64_t x, const PrimeTable& primes, const SpfTable& spf);

// Character-sum indicator (phi(p-1)/(p-1)) sum_{t|p-1} mu(t)/phi(t)
// sum_{ord(chi)=t} chi(a); equals 1 on primitive roots, 0 otherwise.
double indicator_via_characters(int64_t a, uint64_t p, const UnitGroup& group);

// prod_{l <= cutoff} (1 - 1/(l(l-1))), Artin's constant when truncated at
// cutoff; computed in log space. Rejects cutoff < 100 except cutoff = 2
// (kept for the single-factor reference value 1/2).
EulerProductValue artin_constant(uint64_t prime_cutoff);

// A(h) = prod_{l|h} (1 - 1/(l-1)) * prod_{l !| h, l <= cutoff} (1 - 1/(l(l-1))).
EulerProductValue a_of_h(uint64_t h, uint64_t prime_cutoff);

// Hooley's conjectural density delta(a), zero with the degenerate flag for
// a in {0, 1, -1} and perfect squares.
ArtinProfile hooley_density(int64_t a, uint64_t prime_cutoff,
                            SquarefreeSign sign = SquarefreeSign::AbsoluteValue);

// delta(a) * pi(x)
double predicted_count(int64_t a, uint64_t x, const PrimeTable& primes, uint64_t prime_cutoff);

// Sieves the Euler-product primes once and caches A(h) per exponent, for
// callers that evaluate densities over a whole range of a. Not thread-safe.
class DensityCalculator {
 public:
  explicit DensityCalculator(uint64_t prime_cutoff);

  double a_of_h(uint64_t h) const;
  ArtinProfile density(int64_t a, SquarefreeSign sign = SquarefreeSign::AbsoluteValue) const;
  uint64_t cutoff() const { return cutoff_; }

 private:
  uint64_t cutoff_;
  PrimeTable primes_;
  mutable std::map<uint64_t, double> ah_cache_;
};

}  // namespace artinlab
