#include "artinlab/artin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace artinlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Divisors of n with their mu and phi, from the factorization of n.
struct Divisor {
  uint64_t d;
  int mu;
  uint64_t phi;
};

std::vector<Divisor> squarefree_divisors(const Factorization& f) {
  std::vector<Divisor> out{{1, 1, 1}};
  for (const auto& [p, e] : f.factors) {
    size_t base = out.size();
    for (size_t i = 0; i < base; ++i) {
      out.push_back({out[i].d * p, -out[i].mu, out[i].phi * (p - 1)});
    }
  }
  return out;
}

}  // namespace

bool is_primitive_root(int64_t a, uint64_t p, const Factorization& fac_pm1) {
  uint64_t r = mod_pow(a, 1, p);
  if (r == 0) return false;
  if (p == 2) return true;  // p - 1 = 1, the only unit generates trivially
  for (const auto& [l, e] : fac_pm1.factors) {
    if (mod_pow(int64_t(r), (p - 1) / l, p) == 1) return false;
  }
  return true;
}

uint64_t count_na(int64_t a, uint64_t x, const PrimeTable& primes, const SpfTable& spf) {
  if (x < 2) throw std::invalid_argument("count_na: x must be at least 2");
  if (x > primes.limit || x - 1 > spf.limit)
    throw std::invalid_argument("count_na: x exceeds table coverage");
  uint64_t count = 0;
  Factorization f;
  for (uint64_t p : primes.primes) {
    if (p > x) break;
    f.n = p - 1;
    f.factors = factor_with_spf(p - 1, spf);
    if (is_primitive_root(a, p, f)) ++count;
  }
  return count;
}

double indicator_via_characters(int64_t a, uint64_t p, const UnitGroup& group) {
  if (group.modulus() != p) throw std::invalid_argument("indicator: group/prime mismatch");
  uint64_t pm1 = p - 1;
  if (p == 2) return group.is_unit(a) ? 1.0 : 0.0;

  Factorization f = factor(pm1);
  auto divs = squarefree_divisors(f);

  // weight(t) = mu(t)/phi(t), indexed by order; non-squarefree orders weigh 0.
  uint64_t r = group.reduce(a);
  uint64_t t_of_a[1];
  if (!group.dlog_tuple(r, t_of_a)) return 0.0;

  double acc_re = 0.0;
  for (const auto& dv : divs) {
    // characters of order t: c = (p-1)/t * j with gcd(j, t) = 1
    uint64_t t = dv.d;
    uint64_t step = pm1 / t;
    double w = double(dv.mu) / double(dv.phi);
    for (uint64_t j = 0; j < t; ++j) {
      if (std::gcd(j, t) != 1) continue;
      uint64_t num = step * j % pm1 * t_of_a[0] % pm1;
      acc_re += w * std::cos(kTwoPi * double(num) / double(pm1));
    }
  }
  MultInvariants mi = mult_invariants(f);
  return double(mi.phi) / double(pm1) * acc_re;
}

EulerProductValue artin_constant(uint64_t prime_cutoff) {
  if (prime_cutoff < 100 && prime_cutoff != 2)
    throw std::invalid_argument("artin_constant: cutoff must be at least 100");
  PrimeTable pt = sieve_primes(prime_cutoff);
  double log_sum = 0.0;
  for (uint64_t l : pt.primes) {
    log_sum += std::log1p(-1.0 / (double(l) * double(l - 1)));
  }
  EulerProductValue v;
  v.value = std::exp(log_sum);
  v.prime_cutoff = prime_cutoff;
  v.tail_bound = 1.0 / double(prime_cutoff);
  return v;
}

EulerProductValue a_of_h(uint64_t h, uint64_t prime_cutoff) {
  DensityCalculator calc(prime_cutoff);
  EulerProductValue v;
  v.prime_cutoff = prime_cutoff;
  v.tail_bound = 1.0 / double(prime_cutoff);
  v.value = calc.a_of_h(h);
  return v;
}

ArtinProfile hooley_density(int64_t a, uint64_t prime_cutoff, SquarefreeSign sign) {
  return DensityCalculator(prime_cutoff).density(a, sign);
}

DensityCalculator::DensityCalculator(uint64_t prime_cutoff)
    : cutoff_(prime_cutoff), primes_(sieve_primes(std::max<uint64_t>(prime_cutoff, 2))) {}

double DensityCalculator::a_of_h(uint64_t h) const {
  if (h == 0) throw std::invalid_argument("a_of_h: h must be positive");
  if (h % 2 == 0) return 0.0;  // the l = 2 factor 1 - 1/(l-1) vanishes
  auto it = ah_cache_.find(h);
  if (it != ah_cache_.end()) return it->second;
  double h_factor = 1.0;
  for (const auto& [l, e] : factor(h).factors) {
    h_factor *= 1.0 - 1.0 / double(l - 1);
  }
  double log_sum = 0.0;
  for (uint64_t l : primes_.primes) {
    if (l > cutoff_) break;
    if (h % l == 0) continue;
    log_sum += std::log1p(-1.0 / (double(l) * double(l - 1)));
  }
  double value = h_factor * std::exp(log_sum);
  ah_cache_.emplace(h, value);
  return value;
}

ArtinProfile DensityCalculator::density(int64_t a, SquarefreeSign sign) const {
  ArtinProfile prof;
  prof.a = a;
  prof.negative = a < 0;
  if (a == 0 || a == 1 || a == -1) {
    prof.degenerate = true;
    prof.b = uint64_t(a < 0 ? -a : a);
    prof.density = 0.0;
    return prof;
  }
  PowerExponent pe = power_exponent(a);
  SquarefreeDecomposition sq = squarefree_decompose(a);
  prof.h = pe.h;
  prof.b = sq.b;
  if (pe.h % 2 == 0) {
    prof.degenerate = true;  // perfect square
    prof.density = 0.0;
    return prof;
  }
  double density = a_of_h(pe.h);

  bool criterion;
  if (sign == SquarefreeSign::AbsoluteValue) {
    criterion = (sq.b % 4 == 1);
  } else {
    uint64_t residue = prof.negative ? (4 - sq.b % 4) % 4 : sq.b % 4;
    criterion = (residue == 1);
  }
  if (criterion) {
    Factorization fb = factor(sq.b);
    MultInvariants mb = mult_invariants(fb);
    double prod = 1.0;
    for (const auto& [l, e] : fb.factors) {
      if (pe.h % l == 0) {
        prod *= 1.0 / double(l - 2);
      } else {
        prod *= 1.0 / (double(l) * double(l) - double(l) - 1.0);
      }
    }
    density *= 1.0 - double(mb.mu) * prod;
  }
  prof.density = density;
  return prof;
}

double predicted_count(int64_t a, uint64_t x, const PrimeTable& primes, uint64_t prime_cutoff) {
  if (x > primes.limit) throw std::invalid_argument("predicted_count: x exceeds table coverage");
  ArtinProfile prof = hooley_density(a, prime_cutoff);
  auto it = std::upper_bound(primes.primes.begin(), primes.primes.end(), x);
  return prof.density * double(it - primes.primes.begin());
}

}  // namespace artinlab
