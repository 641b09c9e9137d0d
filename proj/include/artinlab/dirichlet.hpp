#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "artinlab/arith.hpp"

namespace artinlab {

// One cyclic factor <g> of (Z/q)^*. Odd p^k and 4 contribute a single factor
// of order phi(p^k); 2^k with k >= 3 contributes two factors sharing the same
// prime power: <-1> of order 2 and <5> of order 2^{k-2}; 2 contributes none.
struct CyclicFactor {
  uint64_t prime = 0;
  uint32_t k = 0;
  uint64_t prime_power = 0;
  uint64_t generator = 0;  // residue mod prime_power
  uint64_t order = 0;
};

// Generator-and-discrete-log representation of (Z/q)^*. Immutable after
// construction; discrete logs are tabulated per factor at build time so that
// evaluating many characters per modulus is O(rank) per value.
class UnitGroup {
 public:
  // 1 <= q <= 10^7 (dlog table memory budget).
  explicit UnitGroup(uint64_t q);

  uint64_t modulus() const { return q_; }
  uint64_t phi() const { return phi_; }
  uint64_t exponent() const { return exponent_; }  // lcm of factor orders
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }

  bool is_unit(int64_t a) const;
  uint64_t reduce(int64_t a) const;  // a mod q in [0, q)

  // Exponent tuple of a unit; throws for non-units.
  std::vector<uint64_t> dlog(int64_t a) const;
  // Fast path used by inner loops: fills t[0..rank), returns false for non-units.
  bool dlog_tuple(uint64_t residue, uint64_t* t) const;

  // chi_c(a) = exp(2 pi i * num / L) with L = exponent(); returns the exact
  // integer numerator for unit residues. The angle is accumulated as
  // (c_j * t_j mod n_j) * (L / n_j) so no rounding enters before the final
  // complex exponential.
  uint64_t angle_numerator(std::span<const uint32_t> c, const uint64_t* t) const;

 private:
  uint64_t q_ = 1;
  uint64_t phi_ = 1;
  uint64_t exponent_ = 1;
  bool needs_odd_ = false;  // q == 2 mod 4: units must be odd
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<int32_t>> dlog_;  // per factor, indexed by residue mod p^k
  std::vector<uint64_t> angle_scale_;       // L / n_j
};

// Dirichlet character mod q as an exponent tuple against the group generators.
struct Character {
  uint64_t q = 1;
  std::vector<uint32_t> c;
  uint64_t order = 1;
  uint64_t conductor = 1;
};

uint64_t character_order(const UnitGroup& g, std::span<const uint32_t> c);

// Fast conductor: per odd-prime-power factor of order n = p^{k-1}(p-1) the
// component conductor is 1 if c = 0, p if p^{k-1} | c != 0, else p^{k - v_p(c)};
// the 2-power part is resolved by the brute-force definition on its own
// subgroup. Agreement with conductor_bruteforce is property-tested.
uint64_t conductor(const UnitGroup& g, std::span<const uint32_t> c);

// Definition: smallest d | q such that chi is trivial on
// {a == 1 (mod d), gcd(a, q) = 1}. Exact integer test, no floating point.
uint64_t conductor_bruteforce(const UnitGroup& g, std::span<const uint32_t> c);

// conductor == q, decided by cheap per-factor tests.
bool is_primitive(const UnitGroup& g, std::span<const uint32_t> c);

// prod over p^k || q of (phi(p^k) - phi(p^{k-1})); zero iff q == 2 (mod 4), q > 2.
uint64_t num_primitive_characters(const UnitGroup& g);

Character make_character(const UnitGroup& g, std::vector<uint32_t> c);

// All phi(q) characters (resp. the primitive ones) in row-major tuple order.
std::vector<Character> enumerate_characters(const UnitGroup& g);
std::vector<Character> enumerate_primitive(const UnitGroup& g);

// 0 when gcd(a, q) > 1, otherwise a root of unity evaluated in double precision.
std::complex<double> char_value(const UnitGroup& g, const Character& chi, int64_t a);

// sum_{a=1..y} chi(a)
std::complex<double> char_sum(const UnitGroup& g, const Character& chi, uint64_t y);

// sum_{-y<=a<=y} chi(a) = (1 + chi(-1)) * char_sum(chi, y)
std::complex<double> char_sum_symmetric(const UnitGroup& g, const Character& chi, uint64_t y);

struct CharSumRecord {
  uint64_t q = 0;
  uint64_t y = 0;
  uint64_t num_primitive = 0;  // 0 marks the flagged empty record (q == 2 mod 4)
  double max_abs = 0.0;
  std::vector<uint32_t> argmax_c;
};

// max over primitive chi mod q of |sum_{a in values} chi(a)|, computed by a
// multidimensional DFT over the character group (all character sums at once).
// Requires q >= 3; q == 2 (mod 4) yields the flagged empty record.
CharSumRecord max_primitive_char_sum_set(const UnitGroup& g, std::span<const uint64_t> values);
CharSumRecord max_primitive_char_sum(const UnitGroup& g, uint64_t y);

// Reference route: direct loop over primitive characters. Must agree with the
// DFT path to within 1e-6 absolute.
CharSumRecord max_primitive_char_sum_set_naive(const UnitGroup& g,
                                               std::span<const uint64_t> values);
CharSumRecord max_primitive_char_sum_naive(const UnitGroup& g, uint64_t y);

}  // namespace artinlab
