#include "artinlab/sieve.hpp"

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace artinlab {

namespace {
constexpr char kMagic[8] = {'A', 'R', 'T', 'N', 'P', 'R', 'M', '1'};
}

PrimeTable sieve_primes(uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be at least 2");
  if (limit > kMaxPrimeLimit) throw BudgetError("sieve_primes: limit exceeds memory budget");
  PrimeTable t;
  t.limit = limit;
  std::vector<bool> comp(limit + 1, false);
  for (uint64_t i = 2; i * i <= limit; ++i) {
    if (!comp[i]) {
      for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  for (uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) t.primes.push_back(i);
  }
  return t;
}

SpfTable sieve_spf(uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve_spf: limit must be at least 2");
  if (limit > kMaxSpfLimit) throw BudgetError("sieve_spf: limit exceeds memory budget");
  SpfTable t;
  t.limit = limit;
  t.spf.assign(limit + 1, 0);
  std::vector<uint32_t> primes;
  for (uint64_t i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = static_cast<uint32_t>(i);
      primes.push_back(static_cast<uint32_t>(i));
    }
    for (uint32_t p : primes) {
      if (p > t.spf[i] || i * p > limit) break;
      t.spf[i * p] = p;
    }
  }
  return t;
}

MultTables table_mult(const SpfTable& spf) {
  MultTables t;
  t.limit = spf.limit;
  const uint64_t n = spf.limit;
  t.mu.assign(n + 1, 0);
  t.phi.assign(n + 1, 0);
  t.big_omega.assign(n + 1, 0);
  t.small_omega.assign(n + 1, 0);
  if (n >= 1) {
    t.mu[1] = 1;
    t.phi[1] = 1;
  }
  for (uint64_t i = 2; i <= n; ++i) {
    uint32_t p = spf.spf[i];
    uint64_t m = i / p;
    t.big_omega[i] = t.big_omega[m] + 1;
    if (m % p == 0) {
      t.mu[i] = 0;
      t.phi[i] = t.phi[m] * p;
      t.small_omega[i] = t.small_omega[m];
    } else {
      t.mu[i] = -t.mu[m];
      t.phi[i] = t.phi[m] * (p - 1);
      t.small_omega[i] = t.small_omega[m] + 1;
    }
  }
  return t;
}

std::vector<std::pair<uint64_t, uint32_t>> factor_with_spf(uint64_t n, const SpfTable& spf) {
  if (n > spf.limit) throw std::invalid_argument("factor_with_spf: n exceeds table coverage");
  std::vector<std::pair<uint64_t, uint32_t>> out;
  while (n > 1) {
    uint32_t p = spf.spf[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

void save_prime_cache(const PrimeTable& table, const std::string& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> f(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!f) throw std::runtime_error("save_prime_cache: cannot open " + path);
  if (std::fwrite(kMagic, 1, 8, f.get()) != 8)
    throw std::runtime_error("save_prime_cache: write failed: " + path);
  uint64_t limit = table.limit;
  if (std::fwrite(&limit, sizeof limit, 1, f.get()) != 1)
    throw std::runtime_error("save_prime_cache: write failed: " + path);
  if (!table.primes.empty() &&
      std::fwrite(table.primes.data(), sizeof(uint64_t), table.primes.size(), f.get()) !=
          table.primes.size())
    throw std::runtime_error("save_prime_cache: write failed: " + path);
}

PrimeTable load_prime_cache(const std::string& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> f(std::fopen(path.c_str(), "rb"), &std::fclose);
  if (!f) throw std::runtime_error("load_prime_cache: cannot open " + path);
  char magic[8];
  if (std::fread(magic, 1, 8, f.get()) != 8 || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("load_prime_cache: bad magic in " + path);
  PrimeTable t;
  if (std::fread(&t.limit, sizeof t.limit, 1, f.get()) != 1)
    throw std::runtime_error("load_prime_cache: truncated header in " + path);
  uint64_t p;
  while (std::fread(&p, sizeof p, 1, f.get()) == 1) t.primes.push_back(p);
  return t;
}

}  // namespace artinlab
