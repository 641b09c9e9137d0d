// Desk-scale experiments over ranges of moduli and bases. The heavy loops
// (census over q, N_a batches over p) are OpenMP kernels that merge results
// in deterministic key order; each keeps a serial reference implementation
// computing the same quantity by an independent route.

#include "artinlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "artinlab/artin.hpp"

namespace artinlab {

namespace {

using u128 = unsigned __int128;

constexpr double kLog2 = 0.69314718055994530941723212145818;

int resolve_threads(int threads) {
#ifdef _OPENMP
  if (threads <= 0) return omp_get_max_threads();
  return threads;
#else
  (void)threads;
  return 1;
#endif
}

uint64_t find_primitive_root(uint64_t p, const Factorization& fac_pm1) {
  if (p == 2) return 1;
  for (uint64_t g = 2; g < p; ++g) {
    if (is_primitive_root(int64_t(g), p, fac_pm1)) return g;
  }
  throw std::logic_error("find_primitive_root: no generator found");
}

// mask[r] = 1 iff r is a primitive root mod p, built by walking powers of a
// generator and sieving exponents coprime to p-1.
void primitive_root_mask(uint64_t p, const Factorization& fac_pm1, std::vector<uint8_t>& mask,
                         std::vector<uint8_t>& coprime) {
  mask.assign(p, 0);
  coprime.assign(p - 1, 1);
  for (const auto& [l, e] : fac_pm1.factors) {
    for (uint64_t i = 0; i < p - 1; i += l) coprime[i] = 0;
  }
  uint64_t g = find_primitive_root(p, fac_pm1);
  uint64_t r = 1;
  for (uint64_t e = 0; e < p - 1; ++e) {
    if (coprime[e]) mask[r] = 1;
    r = r * g % p;
  }
}

struct U128Hash {
  size_t operator()(u128 v) const {
    uint64_t lo = uint64_t(v);
    uint64_t hi = uint64_t(v >> 64);
    return size_t(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x9e3779b97f4a7c15ULL + (lo << 6)));
  }
};

double pi_of(uint64_t x, const PrimeTable& primes) {
  auto it = std::upper_bound(primes.primes.begin(), primes.primes.end(), x);
  return double(it - primes.primes.begin());
}

}  // namespace

std::vector<uint64_t> omega_level_set(uint64_t y, uint32_t w, const MultTables& mult) {
  if (y > mult.limit) throw std::invalid_argument("omega_level_set: y exceeds table coverage");
  std::vector<uint64_t> out;
  if (w == 0) {
    out.push_back(1);
    return out;
  }
  for (uint64_t n = 2; n <= y; ++n) {
    if (mult.big_omega[n] == w) out.push_back(n);
  }
  return out;
}

std::vector<LevelSetStat> level_set_counts(uint64_t y, const MultTables& mult) {
  if (y < 2) throw std::invalid_argument("level_set_counts: y must be at least 2");
  if (y > mult.limit) throw std::invalid_argument("level_set_counts: y exceeds table coverage");
  uint32_t wmax = 0;
  while ((uint64_t(1) << (wmax + 1)) <= y) ++wmax;

  std::vector<uint64_t> hist(wmax + 1, 0);
  hist[0] = 1;  // n = 1
  for (uint64_t n = 2; n <= y; ++n) ++hist[mult.big_omega[n]];

  std::vector<LevelSetStat> out(wmax + 1);
  double logy = std::log(double(y));
  for (uint32_t w = 0; w <= wmax; ++w) {
    double yw = double(y) / double(uint64_t(1) << w);
    out[w].y = y;
    out[w].w = w;
    out[w].count = hist[w];
    out[w].nicolas_main = kNicolasC * yw * std::log(yw);
    out[w].lower_ref = yw / logy;
  }
  return out;
}

uint64_t f_lambda(uint64_t y, double lambda, const MultTables& mult) {
  if (y < 16) throw std::invalid_argument("f_lambda: y must be at least 16");
  if (y > mult.limit) throw std::invalid_argument("f_lambda: y exceeds table coverage");
  double threshold = lambda * std::log(std::log(double(y)));
  uint64_t count = 0;
  for (uint64_t n = 1; n <= y; ++n) {
    if (double(mult.big_omega[n]) > threshold) ++count;
  }
  return count;
}

TkResult t_k_bruteforce(uint32_t k, uint32_t w, uint64_t y, const MultTables& mult,
                        uint64_t budget_tuples) {
  if (k == 0) throw std::invalid_argument("t_k_bruteforce: k must be positive");
  std::vector<uint64_t> a = omega_level_set(y, w, mult);
  uint64_t s = a.size();

  TkResult res;
  res.k = k;
  res.w = w;
  res.y = y;
  res.bound = std::exp(1.0) * double(w) * std::pow(double(k), double(k) * w + 1.0) *
              std::pow(double(s), double(k));
  if (s == 0) {
    res.value = 0;
    return res;
  }
  double work = std::pow(double(s), double(k));
  if (work > double(budget_tuples)) throw BudgetError("t_k_bruteforce: (#A_w)^k exceeds budget");

  std::unordered_map<u128, uint64_t, U128Hash> products;
  std::vector<uint32_t> idx(k, 0);
  while (true) {
    u128 prod = 1;
    for (uint32_t j = 0; j < k; ++j) prod *= a[idx[j]];
    ++products[prod];
    uint32_t j = k;
    bool done = true;
    while (j > 0) {
      --j;
      if (++idx[j] < s) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
    if (done) break;
  }
  uint64_t value = 0;
  for (const auto& [prod, cnt] : products) value += cnt * cnt;
  res.value = value;
  return res;
}

double large_sieve_check(uint32_t k, uint32_t w, uint64_t x, uint64_t y, const MultTables& mult,
                         uint64_t budget_x, uint64_t budget_y) {
  if (k == 0) throw std::invalid_argument("large_sieve_check: k must be positive");
  if (x > budget_x || y > budget_y)
    throw BudgetError("large_sieve_check: x or y exceeds enumeration budget");
  std::vector<uint64_t> a = omega_level_set(y, w, mult);
  if (a.empty()) return 0.0;
  uint64_t t_k = t_k_bruteforce(k, w, y, mult).value;

  double s_k = 0.0;
  for (uint64_t q = 3; q <= x; ++q) {
    if (q % 4 == 2) continue;
    UnitGroup g(q);
    const auto& fs = g.factors();
    size_t rank = fs.size();
    // dlog tuples of the unit elements of A_w
    std::vector<uint64_t> tuples;
    std::vector<uint64_t> t(rank);
    for (uint64_t v : a) {
      if (g.dlog_tuple(v % q, t.data())) {
        for (size_t j = 0; j < rank; ++j) tuples.push_back(t[j]);
      }
    }
    size_t m = rank ? tuples.size() / rank : 0;
    uint64_t L = g.exponent();
    std::vector<std::complex<double>> roots(L);
    for (uint64_t j = 0; j < L; ++j) {
      double ang = 2.0 * M_PI * double(j) / double(L);
      roots[j] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<uint32_t> c(rank, 0);
    while (true) {
      if (is_primitive(g, c)) {
        std::complex<double> sum = 0.0;
        for (size_t i = 0; i < m; ++i) sum += roots[g.angle_numerator(c, tuples.data() + i * rank)];
        s_k += std::pow(std::norm(sum), double(k));
      }
      size_t j = rank;
      bool done = true;
      while (j > 0) {
        --j;
        if (++c[j] < fs[j].order) {
          done = false;
          break;
        }
        c[j] = 0;
      }
      if (done) break;
    }
  }
  double denom = (double(x) * double(x) + std::pow(double(y), double(k))) * double(t_k);
  return s_k / denom;
}

LambdaChoice lambda_of(double D, double x, double y, double range_constant) {
  if (x < 16.0 || y < 16.0) throw std::invalid_argument("lambda_of: x and y must be at least 16");
  LambdaChoice out;
  out.constant = range_constant;
  double llx2 = std::log(2.0 * std::log(x));  // log log (x^2)
  double lly = std::log(std::log(y));
  out.lambda = (3.0 * D + 2.0) / kLog2 * llx2 / lly + 1.0 / kLog2;

  double upper_c = std::log(y) / (lly * lly);
  out.range_c_ok = (3.0 <= out.lambda) && (out.lambda <= upper_c);

  double llx = std::log(std::log(x));
  double log_lower = range_constant * out.lambda * std::log(out.lambda * llx) * llx;
  out.range_y_ok = (log_lower <= std::log(y)) && (y <= x);
  return out;
}

uint32_t k_of_xy(uint64_t x, uint64_t y) {
  if (x < 2 || y < 2) throw std::invalid_argument("k_of_xy: x and y must be at least 2");
  u128 x2 = u128(x) * x;
  u128 acc = 1;
  uint32_t k = 0;
  while (acc * y < x2) {
    acc *= y;
    ++k;
  }
  return k;
}

namespace {

CensusRow census_row_for(uint64_t q, uint64_t y, double norm_factor,
                         const std::vector<double>& thresholds, bool naive) {
  CensusRow row;
  row.q = q;
  row.exceeds.assign(thresholds.size(), 0);
  UnitGroup g(q);
  CharSumRecord rec =
      naive ? max_primitive_char_sum_naive(g, y) : max_primitive_char_sum(g, y);
  row.num_primitive = rec.num_primitive;
  if (rec.num_primitive == 0) return row;
  row.max_abs = rec.max_abs;
  row.normalized = rec.max_abs * norm_factor;
  for (size_t i = 0; i < thresholds.size(); ++i) {
    row.exceeds[i] = rec.max_abs >= thresholds[i] * double(y) ? 1 : 0;
  }
  return row;
}

CensusResult census_common(uint64_t x, uint64_t y, std::vector<double> thresholds, double lambda,
                           int threads, uint64_t budget_x, bool naive) {
  if (x < 3) throw std::invalid_argument("charsum_census: x must be at least 3");
  if (y < 1 || y > x) throw std::invalid_argument("charsum_census: need 1 <= y <= x");
  if (x > budget_x) throw BudgetError("charsum_census: x exceeds desk budget");

  CensusResult res;
  res.x = x;
  res.y = y;
  res.lambda = lambda;
  res.thresholds = std::move(thresholds);
  res.rows.resize(x - 2);
  double norm_factor = std::pow(std::log(double(y)), lambda * kLog2 - 1.0) / double(y);

  const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
#endif
  for (int64_t q = 3; q <= int64_t(x); ++q) {
    res.rows[q - 3] = census_row_for(uint64_t(q), y, norm_factor, res.thresholds, naive);
  }
  (void)nt;

  res.exceed_counts.assign(res.thresholds.size(), 0);
  for (const auto& row : res.rows) {
    if (row.num_primitive == 0) continue;
    for (size_t i = 0; i < res.thresholds.size(); ++i) {
      if (row.exceeds[i]) ++res.exceed_counts[i];
    }
  }
  return res;
}

}  // namespace

CensusResult charsum_census(uint64_t x, uint64_t y, std::vector<double> thresholds, double lambda,
                            int threads, uint64_t budget_x) {
  return census_common(x, y, std::move(thresholds), lambda, threads, budget_x, false);
}

CensusResult charsum_census_serial(uint64_t x, uint64_t y, std::vector<double> thresholds,
                                   double lambda, uint64_t budget_x) {
  return census_common(x, y, std::move(thresholds), lambda, 1, budget_x, true);
}

std::vector<uint64_t> exceptional_set(uint32_t w, uint64_t x, uint64_t y, double delta,
                                      const MultTables& mult, uint64_t budget_x) {
  if (x < 3) throw std::invalid_argument("exceptional_set: x must be at least 3");
  if (x > budget_x) throw BudgetError("exceptional_set: x exceeds desk budget");
  std::vector<uint64_t> a = omega_level_set(y, w, mult);
  std::vector<uint64_t> out;
  for (uint64_t q = 3; q <= x; ++q) {
    if (q % 4 == 2) continue;
    UnitGroup g(q);
    CharSumRecord rec = max_primitive_char_sum_set(g, a);
    if (rec.num_primitive == 0) continue;
    if (rec.max_abs >= delta * double(a.size())) out.push_back(q);
  }
  return out;
}

std::vector<uint64_t> count_na_batch(int64_t a_lo, int64_t a_hi, uint64_t x,
                                     const PrimeTable& primes, const SpfTable& spf, int threads) {
  if (a_lo > a_hi) throw std::invalid_argument("count_na_batch: empty range");
  if (x < 2 || x > primes.limit || x - 1 > spf.limit)
    throw std::invalid_argument("count_na_batch: x exceeds table coverage");
  const size_t n_a = size_t(a_hi - a_lo + 1);
  std::vector<uint64_t> counts(n_a, 0);

  size_t n_p = 0;
  while (n_p < primes.primes.size() && primes.primes[n_p] <= x) ++n_p;

  const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
  {
    std::vector<uint64_t> local(n_a, 0);
    std::vector<uint8_t> mask, coprime;
    Factorization fac;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
    for (int64_t i = 0; i < int64_t(n_p); ++i) {
      uint64_t p = primes.primes[i];
      fac.n = p - 1;
      fac.factors = factor_with_spf(p - 1, spf);
      primitive_root_mask(p, fac, mask, coprime);
      int64_t ip = int64_t(p);
      for (size_t j = 0; j < n_a; ++j) {
        int64_t r = (a_lo + int64_t(j)) % ip;
        if (r < 0) r += ip;
        if (mask[size_t(r)]) ++local[j];
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (size_t j = 0; j < n_a; ++j) counts[j] += local[j];
    }
  }
  (void)nt;
  return counts;
}

std::vector<uint64_t> count_na_batch_serial(int64_t a_lo, int64_t a_hi, uint64_t x,
                                            const PrimeTable& primes, const SpfTable& spf) {
  if (a_lo > a_hi) throw std::invalid_argument("count_na_batch: empty range");
  if (x < 2 || x > primes.limit || x - 1 > spf.limit)
    throw std::invalid_argument("count_na_batch: x exceeds table coverage");
  const size_t n_a = size_t(a_hi - a_lo + 1);
  std::vector<uint64_t> counts(n_a, 0);
  Factorization fac;
  for (uint64_t p : primes.primes) {
    if (p > x) break;
    fac.n = p - 1;
    fac.factors = factor_with_spf(p - 1, spf);
    for (size_t j = 0; j < n_a; ++j) {
      if (is_primitive_root(a_lo + int64_t(j), p, fac)) ++counts[j];
    }
  }
  return counts;
}

namespace {

MomentReport moments_from_counts(uint64_t x, uint64_t y, double D, uint64_t prime_cutoff,
                                 const PrimeTable& primes, const std::vector<uint64_t>& counts) {
  MomentReport rep;
  rep.x = x;
  rep.y = y;
  double a_const = artin_constant(prime_cutoff).value;
  double pix = pi_of(x, primes);
  uint64_t first = 0;
  double second = 0.0;
  for (uint64_t c : counts) first += c;
  double mean = a_const * pix;
  for (uint64_t c : counts) {
    double d = double(c) - mean;
    second += d * d;
  }
  rep.first_moment = first;
  rep.first_prediction = 2.0 * a_const * double(y) * pix;
  rep.second_central = second;
  rep.normalized_variance = y == 0 ? 0.0 : second / (double(y) * pix * pix);
  // lambda is only defined for x, y >= 16 (log log must be positive); small
  // diagnostic runs report 0 instead.
  rep.lambda_used = (x >= 16 && y >= 16) ? lambda_of(D, double(x), double(y)).lambda : 0.0;
  return rep;
}

}  // namespace

MomentReport moments(uint64_t x, uint64_t y, double D, uint64_t prime_cutoff,
                     const PrimeTable& primes, const SpfTable& spf, int threads,
                     uint64_t budget_cells) {
  double cells = (2.0 * double(y) + 1.0) * pi_of(x, primes);
  if (cells > double(budget_cells)) throw BudgetError("moments: y*pi(x) work exceeds budget");
  auto counts = count_na_batch(-int64_t(y), int64_t(y), x, primes, spf, threads);
  return moments_from_counts(x, y, D, prime_cutoff, primes, counts);
}

MomentReport moments_serial_reference(uint64_t x, uint64_t y, double D, uint64_t prime_cutoff,
                                      const PrimeTable& primes, const SpfTable& spf,
                                      uint64_t budget_cells) {
  double cells = (2.0 * double(y) + 1.0) * pi_of(x, primes);
  if (cells > double(budget_cells)) throw BudgetError("moments: y*pi(x) work exceeds budget");
  auto counts = count_na_batch_serial(-int64_t(y), int64_t(y), x, primes, spf);
  return moments_from_counts(x, y, D, prime_cutoff, primes, counts);
}

double phi_ratio_sum(uint64_t x, const PrimeTable& primes, const SpfTable& spf) {
  if (x < 2 || x > primes.limit || x - 1 > spf.limit)
    throw std::invalid_argument("phi_ratio_sum: x exceeds table coverage");
  double sum = 0.0;
  for (uint64_t p : primes.primes) {
    if (p > x) break;
    uint64_t phi = 1;
    for (const auto& [l, e] : factor_with_spf(p - 1, spf)) {
      uint64_t le = l;
      for (uint32_t i = 1; i < e; ++i) le *= l;
      phi *= le / l * (l - 1);
    }
    sum += double(phi) / double(p);
  }
  return sum;
}

TitchmarshResult titchmarsh_sum(uint64_t x, const PrimeTable& primes, const MultTables& mult) {
  if (x < 2 || x > primes.limit || x - 1 > mult.limit)
    throw std::invalid_argument("titchmarsh_sum: x exceeds table coverage");
  TitchmarshResult res;
  res.x = x;
  for (uint64_t p : primes.primes) {
    if (p > x) break;
    res.sum += uint64_t(1) << mult.small_omega[p - 1];
  }
  res.ratio = double(res.sum) / double(x);
  return res;
}

}  // namespace artinlab
