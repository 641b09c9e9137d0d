// Characters mod q are exponent tuples c against fixed generators of the
// cyclic decomposition of (Z/q)^*:
//
//   chi_c(a) = e( sum_j c_j t_j / n_j ),   t = dlog(a).
//
// Sums over all characters at once are therefore a multidimensional DFT of
// the dlog-binned weights f[t] over Z_{n_1} x ... x Z_{n_m}; FFTW's BACKWARD
// transform carries exactly the e(+...) kernel above. The naive per-character
// summation is kept as the reference route for that fast path.

#include "artinlab/dirichlet.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "artinlab/sieve.hpp"

namespace artinlab {

namespace {

constexpr uint64_t kMaxUnitGroupModulus = 10'000'000;
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::mutex g_fftw_planner_mutex;

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(size_t n) : data(fftw_alloc_complex(n)) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Smallest primitive root modulo p^k, odd prime p.
uint64_t smallest_primitive_root(uint64_t p, uint32_t k) {
  uint64_t pk = pow_u64(p, k);
  uint64_t n = pk / p * (p - 1);  // phi(p^k)
  std::vector<uint64_t> prime_divs;
  if (k >= 2) prime_divs.push_back(p);
  for (const auto& [q, e] : factor(p - 1).factors) prime_divs.push_back(q);
  for (uint64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (uint64_t r : prime_divs) {
      if (mod_pow(int64_t(g), n / r, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("smallest_primitive_root: search failed");
}

// Row-major strides for the tuple layout shared by enumeration and the DFT.
std::vector<uint64_t> row_major_strides(const std::vector<CyclicFactor>& fs) {
  std::vector<uint64_t> stride(fs.size());
  uint64_t acc = 1;
  for (size_t j = fs.size(); j-- > 0;) {
    stride[j] = acc;
    acc *= fs[j].order;
  }
  return stride;
}

// Per-digit primitivity predicates; valid only when q != 2 (mod 4).
std::vector<std::vector<uint8_t>> primitive_digit_masks(const UnitGroup& g) {
  const auto& fs = g.factors();
  std::vector<std::vector<uint8_t>> ok(fs.size());
  for (size_t j = 0; j < fs.size(); ++j) {
    ok[j].assign(fs[j].order, 0);
    for (uint64_t v = 0; v < fs[j].order; ++v) {
      bool good;
      if (fs[j].prime == 2) {
        if (fs[j].k == 2) {
          good = (v == 1);
        } else if (fs[j].generator == 5) {
          good = (v % 2 == 1);
        } else {
          good = true;  // the <-1> factor imposes no condition
        }
      } else {
        good = (fs[j].k == 1) ? (v != 0) : (v % fs[j].prime != 0);
      }
      ok[j][v] = good ? 1 : 0;
    }
  }
  return ok;
}

}  // namespace

UnitGroup::UnitGroup(uint64_t q) : q_(q) {
  if (q == 0) throw std::invalid_argument("UnitGroup: q must be positive");
  if (q > kMaxUnitGroupModulus) throw BudgetError("UnitGroup: q exceeds dlog memory budget");
  if (q == 1) return;

  for (const auto& [p, k] : factor(q).factors) {
    uint64_t pk = pow_u64(p, k);
    if (p == 2) {
      if (k == 1) {
        needs_odd_ = true;
        continue;  // phi(2) = 1, no cyclic factor
      }
      if (k == 2) {
        factors_.push_back({2, k, pk, 3, 2});
      } else {
        factors_.push_back({2, k, pk, pk - 1, 2});
        factors_.push_back({2, k, pk, 5, pk / 4});
      }
    } else {
      uint64_t order = pk / p * (p - 1);
      factors_.push_back({p, k, pk, smallest_primitive_root(p, k), order});
    }
  }

  phi_ = 1;
  exponent_ = 1;
  for (const auto& f : factors_) {
    phi_ *= f.order;
    exponent_ = std::lcm(exponent_, f.order);
  }

  dlog_.resize(factors_.size());
  size_t j = 0;
  while (j < factors_.size()) {
    const auto& f = factors_[j];
    if (f.prime == 2 && f.k >= 3) {
      // Joint walk over (-1)^s * 5^t fills both 2-power factors.
      auto& ds = dlog_[j];
      auto& dt = dlog_[j + 1];
      ds.assign(f.prime_power, -1);
      dt.assign(f.prime_power, -1);
      uint64_t pk = f.prime_power;
      for (uint64_t s = 0; s < 2; ++s) {
        uint64_t r = (s == 0) ? 1 : pk - 1;
        for (uint64_t t = 0; t < pk / 4; ++t) {
          ds[r] = static_cast<int32_t>(s);
          dt[r] = static_cast<int32_t>(t);
          r = r * 5 % pk;
        }
      }
      j += 2;
    } else {
      auto& d = dlog_[j];
      d.assign(f.prime_power, -1);
      uint64_t r = 1;
      for (uint64_t e = 0; e < f.order; ++e) {
        d[r] = static_cast<int32_t>(e);
        r = r * f.generator % f.prime_power;
      }
      ++j;
    }
  }

  angle_scale_.resize(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) angle_scale_[i] = exponent_ / factors_[i].order;
}

uint64_t UnitGroup::reduce(int64_t a) const {
  int64_t m = int64_t(q_);
  int64_t r = a % m;
  if (r < 0) r += m;
  return uint64_t(r);
}

bool UnitGroup::is_unit(int64_t a) const {
  if (q_ == 1) return true;
  uint64_t r = reduce(a);
  if (needs_odd_ && r % 2 == 0) return false;
  for (size_t j = 0; j < factors_.size(); ++j) {
    if (dlog_[j][r % factors_[j].prime_power] < 0) return false;
  }
  return true;
}

bool UnitGroup::dlog_tuple(uint64_t residue, uint64_t* t) const {
  if (needs_odd_ && residue % 2 == 0) return false;
  for (size_t j = 0; j < factors_.size(); ++j) {
    int32_t v = dlog_[j][residue % factors_[j].prime_power];
    if (v < 0) return false;
    t[j] = uint64_t(v);
  }
  return true;
}

std::vector<uint64_t> UnitGroup::dlog(int64_t a) const {
  std::vector<uint64_t> t(factors_.size());
  if (!dlog_tuple(reduce(a), t.data()))
    throw std::invalid_argument("UnitGroup::dlog: a is not a unit");
  return t;
}

uint64_t UnitGroup::angle_numerator(std::span<const uint32_t> c, const uint64_t* t) const {
  uint64_t num = 0;
  for (size_t j = 0; j < factors_.size(); ++j) {
    uint64_t n = factors_[j].order;
    num += (uint64_t(c[j]) * t[j] % n) * angle_scale_[j];
  }
  return num % exponent_;
}

uint64_t character_order(const UnitGroup& g, std::span<const uint32_t> c) {
  uint64_t ord = 1;
  const auto& fs = g.factors();
  for (size_t j = 0; j < fs.size(); ++j) {
    uint64_t n = fs[j].order;
    ord = std::lcm(ord, n / std::gcd(n, uint64_t(c[j])));
  }
  return ord;
}

bool is_primitive(const UnitGroup& g, std::span<const uint32_t> c) {
  uint64_t q = g.modulus();
  if (q == 1) return true;
  if (q % 4 == 2 || q == 2) return false;
  const auto& fs = g.factors();
  for (size_t j = 0; j < fs.size(); ++j) {
    const auto& f = fs[j];
    if (f.prime == 2) {
      if (f.k == 2 && c[j] != 1) return false;
      if (f.k >= 3 && f.generator == 5 && c[j] % 2 == 0) return false;
    } else {
      if (f.k == 1 && c[j] == 0) return false;
      if (f.k >= 2 && c[j] % f.prime == 0) return false;
    }
  }
  return true;
}

uint64_t num_primitive_characters(const UnitGroup& g) {
  uint64_t q = g.modulus();
  if (q == 1) return 1;
  if (q % 4 == 2 || q == 2) return 0;
  uint64_t count = 1;
  const auto& fs = g.factors();
  for (size_t j = 0; j < fs.size(); ++j) {
    const auto& f = fs[j];
    if (f.prime == 2 && f.k >= 3 && f.generator != 5) continue;  // counted with the <5> factor
    if (f.prime == 2) {
      count *= (f.k == 2) ? 1 : f.prime_power / 4;  // phi(2^k) - phi(2^{k-1})
    } else {
      uint64_t pk1 = f.prime_power / f.prime;  // p^{k-1}
      uint64_t phi_pk = pk1 * (f.prime - 1);
      uint64_t phi_pk1 = (f.k == 1) ? 1 : pk1 / f.prime * (f.prime - 1);
      count *= phi_pk - phi_pk1;
    }
  }
  return count;
}

uint64_t conductor(const UnitGroup& g, std::span<const uint32_t> c) {
  uint64_t q = g.modulus();
  if (q == 1) return 1;
  const auto& fs = g.factors();
  uint64_t cond = 1;
  size_t j = 0;
  while (j < fs.size()) {
    const auto& f = fs[j];
    if (f.prime == 2 && f.k >= 3) {
      // Brute force on the 2-part: chi((-1)^s 5^t) = e(cs*s/2 + ct*t/nt).
      uint64_t pk = f.prime_power;
      uint64_t nt = fs[j + 1].order;
      uint64_t L2 = std::lcm(uint64_t(2), nt);
      uint32_t cs = c[j], ct = c[j + 1];
      // local dlog tables: walk (-1)^s 5^t once
      std::vector<int8_t> ls(pk, -1);
      std::vector<int32_t> lt(pk, -1);
      for (uint64_t s = 0; s < 2; ++s) {
        uint64_t r = (s == 0) ? 1 : pk - 1;
        for (uint64_t t = 0; t < nt; ++t) {
          ls[r] = int8_t(s);
          lt[r] = int32_t(t);
          r = r * 5 % pk;
        }
      }
      uint64_t local = pk;
      for (uint64_t d = 1; d <= pk; d *= 2) {
        bool trivial = true;
        for (uint64_t x = 1 + d; x < pk && trivial; x += d) {
          if (x % 2 == 0) continue;
          uint64_t num = (uint64_t(cs) * ls[x] % 2) * (L2 / 2) +
                         (uint64_t(ct) * uint64_t(lt[x]) % nt) * (L2 / nt);
          if (num % L2 != 0) trivial = false;
        }
        if (trivial) {
          local = d;
          break;
        }
      }
      cond *= local;
      j += 2;
    } else if (f.prime == 2 && f.k == 2) {
      cond *= (c[j] == 0) ? 1 : 4;
      ++j;
    } else {
      uint64_t p = f.prime;
      uint64_t cj = c[j];
      if (cj == 0) {
        // contributes 1
      } else {
        uint64_t pk1 = f.prime_power / p;  // p^{k-1}
        if (cj % pk1 == 0) {
          cond *= p;
        } else {
          uint32_t v = 0;
          uint64_t x = cj;
          while (x % p == 0) {
            x /= p;
            ++v;
          }
          uint64_t local = f.prime_power;
          for (uint32_t i = 0; i < v; ++i) local /= p;
          cond *= local;
        }
      }
      ++j;
    }
  }
  return cond;
}

uint64_t conductor_bruteforce(const UnitGroup& g, std::span<const uint32_t> c) {
  uint64_t q = g.modulus();
  if (q == 1) return 1;
  std::vector<uint64_t> divisors;
  divisors.push_back(1);
  for (const auto& [p, e] : factor(q).factors) {
    size_t base = divisors.size();
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) {
      pe *= p;
      for (size_t k = 0; k < base; ++k) divisors.push_back(divisors[k] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<uint64_t> t(g.rank());
  for (uint64_t d : divisors) {
    bool trivial = true;
    for (uint64_t x = 1; x < q && trivial; x += d) {
      if (!g.dlog_tuple(x, t.data())) continue;
      if (g.angle_numerator(c, t.data()) != 0) trivial = false;
    }
    if (trivial) return d;
  }
  return q;
}

Character make_character(const UnitGroup& g, std::vector<uint32_t> c) {
  if (c.size() != g.rank()) throw std::invalid_argument("make_character: tuple rank mismatch");
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] >= g.factors()[j].order)
      throw std::invalid_argument("make_character: exponent out of range");
  }
  Character chi;
  chi.q = g.modulus();
  chi.order = character_order(g, c);
  chi.conductor = conductor(g, c);
  chi.c = std::move(c);
  return chi;
}

std::vector<Character> enumerate_characters(const UnitGroup& g) {
  std::vector<Character> out;
  out.reserve(g.phi());
  std::vector<uint32_t> c(g.rank(), 0);
  const auto& fs = g.factors();
  while (true) {
    out.push_back(make_character(g, c));
    size_t j = g.rank();
    while (j > 0) {
      --j;
      if (++c[j] < fs[j].order) break;
      c[j] = 0;
      if (j == 0) return out;
    }
    if (g.rank() == 0) return out;
  }
}

std::vector<Character> enumerate_primitive(const UnitGroup& g) {
  std::vector<Character> out;
  for (auto& chi : enumerate_characters(g)) {
    if (chi.conductor == g.modulus()) out.push_back(std::move(chi));
  }
  return out;
}

std::complex<double> char_value(const UnitGroup& g, const Character& chi, int64_t a) {
  if (g.modulus() == 1) return {1.0, 0.0};
  uint64_t r = g.reduce(a);
  std::vector<uint64_t> t(g.rank());
  if (!g.dlog_tuple(r, t.data())) return {0.0, 0.0};
  uint64_t num = g.angle_numerator(chi.c, t.data());
  double angle = kTwoPi * double(num) / double(g.exponent());
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> char_sum(const UnitGroup& g, const Character& chi, uint64_t y) {
  if (y == 0) throw std::invalid_argument("char_sum: y must be positive");
  uint64_t q = g.modulus();
  if (q == 1) return {double(y), 0.0};
  uint64_t L = g.exponent();
  std::vector<std::complex<double>> roots(L);
  for (uint64_t j = 0; j < L; ++j) {
    double angle = kTwoPi * double(j) / double(L);
    roots[j] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<uint64_t> t(g.rank());
  std::complex<double> sum = 0.0;
  for (uint64_t a = 1; a <= y; ++a) {
    uint64_t r = a % q;
    if (!g.dlog_tuple(r, t.data())) continue;
    sum += roots[g.angle_numerator(chi.c, t.data())];
  }
  return sum;
}

std::complex<double> char_sum_symmetric(const UnitGroup& g, const Character& chi, uint64_t y) {
  std::complex<double> minus_one = char_value(g, chi, -1);
  return (1.0 + minus_one) * char_sum(g, chi, y);
}

namespace {

CharSumRecord flagged_record(const UnitGroup& g) {
  CharSumRecord rec;
  rec.q = g.modulus();
  rec.num_primitive = 0;
  rec.max_abs = 0.0;
  return rec;
}

std::vector<uint32_t> decode_tuple(const UnitGroup& g, uint64_t idx) {
  const auto& fs = g.factors();
  std::vector<uint32_t> c(fs.size());
  for (size_t j = fs.size(); j-- > 0;) {
    c[j] = static_cast<uint32_t>(idx % fs[j].order);
    idx /= fs[j].order;
  }
  return c;
}

}  // namespace

CharSumRecord max_primitive_char_sum_set(const UnitGroup& g, std::span<const uint64_t> values) {
  uint64_t q = g.modulus();
  if (q < 3) throw std::invalid_argument("max_primitive_char_sum: q must be at least 3");
  CharSumRecord rec;
  rec.q = q;
  rec.num_primitive = num_primitive_characters(g);
  if (rec.num_primitive == 0) return flagged_record(g);

  const auto& fs = g.factors();
  const size_t rank = fs.size();
  const uint64_t phi = g.phi();
  std::vector<int> dims(rank);
  for (size_t j = 0; j < rank; ++j) dims[j] = static_cast<int>(fs[j].order);
  auto stride = row_major_strides(fs);

  FftwBuffer buf(phi);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_planner_mutex);
    plan = fftw_plan_dft(static_cast<int>(rank), dims.data(), buf.data, buf.data, FFTW_BACKWARD,
                         FFTW_ESTIMATE);
  }
  for (uint64_t i = 0; i < phi; ++i) buf.data[i][0] = buf.data[i][1] = 0.0;

  std::vector<uint64_t> t(rank);
  for (uint64_t v : values) {
    uint64_t r = v % q;
    if (!g.dlog_tuple(r, t.data())) continue;
    uint64_t idx = 0;
    for (size_t j = 0; j < rank; ++j) idx += t[j] * stride[j];
    buf.data[idx][0] += 1.0;
  }

  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_planner_mutex);
    fftw_destroy_plan(plan);
  }

  auto ok = primitive_digit_masks(g);
  std::vector<uint32_t> digit(rank, 0);
  double best = -1.0;
  uint64_t best_idx = 0;
  for (uint64_t idx = 0; idx < phi; ++idx) {
    bool prim = true;
    for (size_t j = 0; j < rank; ++j) {
      if (!ok[j][digit[j]]) {
        prim = false;
        break;
      }
    }
    if (prim) {
      double n2 = buf.data[idx][0] * buf.data[idx][0] + buf.data[idx][1] * buf.data[idx][1];
      if (n2 > best) {
        best = n2;
        best_idx = idx;
      }
    }
    for (size_t j = rank; j-- > 0;) {
      if (++digit[j] < fs[j].order) break;
      digit[j] = 0;
    }
  }
  rec.max_abs = std::sqrt(std::max(best, 0.0));
  rec.argmax_c = decode_tuple(g, best_idx);
  return rec;
}

CharSumRecord max_primitive_char_sum(const UnitGroup& g, uint64_t y) {
  if (y == 0) throw std::invalid_argument("max_primitive_char_sum: y must be positive");
  std::vector<uint64_t> values(y);
  std::iota(values.begin(), values.end(), uint64_t(1));
  CharSumRecord rec = max_primitive_char_sum_set(g, values);
  rec.y = y;
  return rec;
}

CharSumRecord max_primitive_char_sum_set_naive(const UnitGroup& g,
                                               std::span<const uint64_t> values) {
  uint64_t q = g.modulus();
  if (q < 3) throw std::invalid_argument("max_primitive_char_sum: q must be at least 3");
  CharSumRecord rec;
  rec.q = q;
  rec.num_primitive = num_primitive_characters(g);
  if (rec.num_primitive == 0) return flagged_record(g);

  const auto& fs = g.factors();
  const size_t rank = fs.size();
  uint64_t L = g.exponent();
  std::vector<std::complex<double>> roots(L);
  for (uint64_t j = 0; j < L; ++j) {
    double angle = kTwoPi * double(j) / double(L);
    roots[j] = {std::cos(angle), std::sin(angle)};
  }

  // dlog tuples of the unit elements of the input multiset
  std::vector<uint64_t> tuples;
  std::vector<uint64_t> t(rank);
  for (uint64_t v : values) {
    if (g.dlog_tuple(v % q, t.data())) {
      for (size_t j = 0; j < rank; ++j) tuples.push_back(t[j]);
    }
  }
  size_t m = tuples.size() / std::max<size_t>(rank, 1);

  std::vector<uint32_t> c(rank, 0);
  double best = -1.0;
  std::vector<uint32_t> best_c(rank, 0);
  while (true) {
    if (is_primitive(g, c)) {
      std::complex<double> sum = 0.0;
      for (size_t i = 0; i < m; ++i) {
        sum += roots[g.angle_numerator(c, tuples.data() + i * rank)];
      }
      double n2 = std::norm(sum);
      if (n2 > best) {
        best = n2;
        best_c = c;
      }
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
  rec.max_abs = std::sqrt(std::max(best, 0.0));
  rec.argmax_c = best_c;
  return rec;
}

CharSumRecord max_primitive_char_sum_naive(const UnitGroup& g, uint64_t y) {
  if (y == 0) throw std::invalid_argument("max_primitive_char_sum: y must be positive");
  std::vector<uint64_t> values(y);
  std::iota(values.begin(), values.end(), uint64_t(1));
  CharSumRecord rec = max_primitive_char_sum_set_naive(g, values);
  rec.y = y;
  return rec;
}

}  // namespace artinlab
