#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artinlab {

// Work-unit limits were exceeded; the CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimeTable {
  uint64_t limit = 0;
  std::vector<uint64_t> primes;  // all primes <= limit, ascending
  uint64_t pi() const { return primes.size(); }
};

// spf[n] = smallest prime factor of n for 2 <= n <= limit (0 below 2).
struct SpfTable {
  uint64_t limit = 0;
  std::vector<uint32_t> spf;
};

struct MultTables {
  uint64_t limit = 0;
  std::vector<int8_t> mu;
  std::vector<uint32_t> phi;
  std::vector<uint8_t> big_omega;
  std::vector<uint8_t> small_omega;
};

inline constexpr uint64_t kMaxPrimeLimit = 1'000'000'000;
inline constexpr uint64_t kMaxSpfLimit = 100'000'000;

PrimeTable sieve_primes(uint64_t limit);

// Linear (Euler) sieve, O(limit) construction.
SpfTable sieve_spf(uint64_t limit);

// mu, phi, Omega, omega arrays for n <= limit, derived from the spf table.
MultTables table_mult(const SpfTable& spf);

// Factor n using a covering spf table (n <= spf.limit).
std::vector<std::pair<uint64_t, uint32_t>> factor_with_spf(uint64_t n, const SpfTable& spf);

// Binary cache: 8-byte magic "ARTNPRM1", little-endian u64 limit, u64 primes.
void save_prime_cache(const PrimeTable& table, const std::string& path);
PrimeTable load_prime_cache(const std::string& path);

}  // namespace artinlab
