#ifndef CLIFFSYM_BLADE_HPP
#define CLIFFSYM_BLADE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cliffsym/signature.hpp"

namespace cliffsym {

/// Basis blade e^{a_1...a_k} of Cl(p,q), encoded as a bitmask over generator
/// labels: bit a is set iff generator a occurs in the product. The bitmask is
/// the canonical strictly-increasing form; the empty mask is the identity e.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return std::popcount(mask); }

  friend bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
  friend bool operator!=(Blade a, Blade b) { return a.mask != b.mask; }
};

struct BladeProduct {
  int sign; // +1 or -1, exact
  Blade result;
};

/// Sign of the permutation that merges the ascending label lists of a and b
/// into one ascending list: (-1)^t where t = #{(i,j) : i in a, j in b, i > j},
/// the number of adjacent transpositions needed. Each right shift of a by k
/// aligns labels of a with labels of b exactly k below them, so summing
/// popcount((a >> k) & b) over k >= 1 counts the inversions.
inline int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : +1;
}

inline void check_blade(Blade a, const Signature& sig, const char* who) {
  if (a.mask >> sig.n())
    throw std::invalid_argument(std::string(who) + ": blade " +
                                std::to_string(a.mask) + " out of range for " +
                                sig.str());
}

/// Product of two basis blades: e^A e^B = sign * e^(A xor B).
///
/// The sign is the reordering permutation sign times one metric factor
/// eta^{aa} per repeated label (repeated labels become adjacent after
/// sorting and contract via e^a e^a = eta^{aa} e). All integer arithmetic,
/// exact by construction.
inline BladeProduct blade_mul(Blade a, Blade b, const Signature& sig) {
  check_blade(a, sig, "blade_mul");
  check_blade(b, sig, "blade_mul");
  int sign = reorder_sign(a.mask, b.mask);
  for (std::uint32_t common = a.mask & b.mask; common; common &= common - 1)
    sign *= sig.metric(std::countr_zero(common));
  return {sign, Blade{a.mask ^ b.mask}};
}

/// Sign picked up by a basis blade under Hermitian conjugation:
/// (e^{i_1...i_k})^dagger = e_{i_k}...e_{i_1}. Lowering each index contributes
/// eta_{ii}; re-sorting the reversed distinct labels contributes
/// (-1)^(k(k-1)/2).
inline int dagger_sign(Blade a, const Signature& sig) {
  check_blade(a, sig, "dagger_sign");
  const int k = a.grade();
  int sign = (k * (k - 1) / 2) % 2 ? -1 : +1;
  for (std::uint32_t m = a.mask; m; m &= m - 1)
    sign *= sig.metric(std::countr_zero(m));
  return sign;
}

/// Display name: "e" for the identity, otherwise "e" followed by the ascending
/// labels ("e0", "e01", "e013"). Single-digit labels only.
inline std::string blade_name(Blade a) {
  std::string s = "e";
  for (std::uint32_t m = a.mask; m; m &= m - 1) {
    const int label = std::countr_zero(m);
    if (label > 9)
      throw std::domain_error("blade_name: labels above 9 have no text form");
    s += static_cast<char>('0' + label);
  }
  return s;
}

/// Serialization key: the label digits without the leading "e"; "" for the
/// identity blade.
inline std::string blade_key(Blade a) { return blade_name(a).substr(1); }

} // namespace cliffsym

#endif
