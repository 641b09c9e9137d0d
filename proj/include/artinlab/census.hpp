#pragma once

#include <cstdint>
#include <vector>

#include "artinlab/arith.hpp"
#include "artinlab/dirichlet.hpp"
#include "artinlab/sieve.hpp"

namespace artinlab {

// Nicolas' constant for the count of n <= x with Omega(n) = m; stored
// reference value, the defining Euler product is not computed here.
inline constexpr double kNicolasC = 0.3786;

struct LevelSetStat {
  uint64_t y = 0;
  uint32_t w = 0;
  uint64_t count = 0;
  double nicolas_main = 0.0;  // C * (y/2^w) * log(y/2^w)
  double lower_ref = 0.0;     // y / (2^w * log y)
};

struct CensusRow {
  uint64_t q = 0;
  uint64_t num_primitive = 0;  // 0 marks moduli without primitive characters
  double max_abs = 0.0;
  double normalized = 0.0;  // max_abs * (log y)^{lambda*log2 - 1} / y
  std::vector<uint8_t> exceeds;
};

struct CensusResult {
  uint64_t x = 0;
  uint64_t y = 0;
  double lambda = 3.0;
  std::vector<double> thresholds;        // delta values; exceed test is max >= delta*y
  std::vector<CensusRow> rows;           // q = 3..x
  std::vector<uint64_t> exceed_counts;   // per threshold, null rows excluded
};

struct MomentReport {
  uint64_t x = 0;
  uint64_t y = 0;
  uint64_t first_moment = 0;       // sum_{|a|<=y} N_a(x), exact
  double first_prediction = 0.0;   // 2*A*y*pi(x)
  double second_central = 0.0;     // sum (N_a - A*pi(x))^2
  double normalized_variance = 0.0;
  double lambda_used = 0.0;
};

struct TkResult {
  uint32_t k = 1;
  uint32_t w = 0;
  uint64_t y = 0;
  uint64_t value = 0;  // ordered 2k-tuple solution count
  double bound = 0.0;  // e * w * k^{kw+1} * (#A_w)^k; degenerate (0) at w = 0
};

struct LambdaChoice {
  double lambda = 0.0;
  bool range_c_ok = false;  // 3 <= lambda <= log y / (log log y)^2
  bool range_y_ok = false;  // exp(c*lambda*log(lambda loglog x)*loglog x) <= y <= x
  double constant = 20.0;   // the multiplier in the lower range bound
};

struct TitchmarshResult {
  uint64_t x = 0;
  uint64_t sum = 0;
  double ratio = 0.0;
};

// {n <= y : Omega(n) = w}; w = 0 gives {1}.
std::vector<uint64_t> omega_level_set(uint64_t y, uint32_t w, const MultTables& mult);

// Exact #A_w(y) for w = 0..floor(log2 y); the counts partition [1, y].
std::vector<LevelSetStat> level_set_counts(uint64_t y, const MultTables& mult);

// #{a <= y : Omega(a) > lambda * log log y}; rejects y < 16.
uint64_t f_lambda(uint64_t y, double lambda, const MultTables& mult);

// Ordered solutions of a_1...a_k = b_1...b_k with all entries in A_w(y),
// counted exactly by product-multiset hashing. (#A_w)^k is budget-capped.
TkResult t_k_bruteforce(uint32_t k, uint32_t w, uint64_t y, const MultTables& mult,
                        uint64_t budget_tuples = 100'000'000);

// S_k(w,x,y) / ((x^2 + y^k) * T_k(w,y)); the multiplicative large sieve
// predicts a value <= 1. Sums over moduli 3 <= q <= x.
double large_sieve_check(uint32_t k, uint32_t w, uint64_t x, uint64_t y, const MultTables& mult,
                         uint64_t budget_x = 100, uint64_t budget_y = 50);

// lambda = (3D+2)/log2 * loglog(x^2)/loglog(y) + 1/log2, with the range
// checks evaluated in log space. Requires x, y >= 16.
LambdaChoice lambda_of(double D, double x, double y, double range_constant = 20.0);

// The integer k >= 0 with y^k < x^2 <= y^{k+1}; requires x, y >= 2.
uint32_t k_of_xy(uint64_t x, uint64_t y);

// Character-sum census over 3 <= q <= x: max primitive character sum per
// modulus (DFT fast path), normalized column at the given lambda, and
// per-threshold exceedance flags (ties count as exceeding). Deterministic
// output for any thread count.
CensusResult charsum_census(uint64_t x, uint64_t y, std::vector<double> thresholds,
                            double lambda, int threads, uint64_t budget_x = 100'000);

// Serial reference: plain loop, naive per-character summation.
CensusResult charsum_census_serial(uint64_t x, uint64_t y, std::vector<double> thresholds,
                                   double lambda, uint64_t budget_x = 100'000);

// Moduli 3 <= q <= x whose maximal primitive character sum over A_w(y)
// reaches delta * #A_w(y).
std::vector<uint64_t> exceptional_set(uint32_t w, uint64_t x, uint64_t y, double delta,
                                      const MultTables& mult, uint64_t budget_x = 100'000);

// N_a(x) for every a in [a_lo, a_hi]: per-prime primitive-root masks walked
// from a generator, merged deterministically.
std::vector<uint64_t> count_na_batch(int64_t a_lo, int64_t a_hi, uint64_t x,
                                     const PrimeTable& primes, const SpfTable& spf, int threads);

// Reference route: per-(a, p) modular order tests.
std::vector<uint64_t> count_na_batch_serial(int64_t a_lo, int64_t a_hi, uint64_t x,
                                            const PrimeTable& primes, const SpfTable& spf);

// First and second moment of N_a(x) over |a| <= y against 2*A*y*pi(x) and
// A*pi(x); predictions use artin_constant at prime_cutoff.
MomentReport moments(uint64_t x, uint64_t y, double D, uint64_t prime_cutoff,
                     const PrimeTable& primes, const SpfTable& spf, int threads,
                     uint64_t budget_cells = 2'000'000'000);

MomentReport moments_serial_reference(uint64_t x, uint64_t y, double D, uint64_t prime_cutoff,
                                      const PrimeTable& primes, const SpfTable& spf,
                                      uint64_t budget_cells = 2'000'000'000);

// sum_{p<=x} phi(p-1)/p
double phi_ratio_sum(uint64_t x, const PrimeTable& primes, const SpfTable& spf);

// sum_{p<=x} 2^{omega(p-1)} and its ratio to x.
TitchmarshResult titchmarsh_sum(uint64_t x, const PrimeTable& primes, const MultTables& mult);

}  // namespace artinlab
