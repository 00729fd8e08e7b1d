#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliff {

// Blade masks are 64-bit words, so a signature carries at most 63 generators.
inline constexpr int kMaxGenerators = 63;

/// Cl(p,q): generators e1..ep square to +1, e(p+1)..e(p+q) square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_);

  int n() const { return p + q; }
  // Bits of the generators that square to -1.
  std::uint64_t negative_mask() const;
  std::uint64_t full_mask() const;
  std::string name() const;  // "Cl(p,q)"

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A basis element e_{i1 i2 ... ik}, i1 < ... < ik, stored as a bitset
/// (bit i-1 set for generator e_i). The empty mask is the unit.
struct Blade {
  std::uint64_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t m) : mask(m) {}

  static Blade generator(int index);  // e_index, 1-based
  static Blade from_indices(const std::vector<int>& indices);

  int grade() const { return std::popcount(mask); }
  bool is_even() const { return (grade() & 1) == 0; }
  std::vector<int> indices() const;
  std::string name() const;  // "1", "e1", "e124"

  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

struct BladeProduct {
  int sign = 1;
  Blade blade;
};

/// Parity of the transpositions needed to merge a and b into canonical order.
inline int reorder_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  // For every generator of b, count the generators of a with a larger index.
  while (b != 0) {
    const int i = std::countr_zero(b);
    swaps += std::popcount(a >> (i + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Canonical product e_A e_B = sign * e_{A xor B}; throws on indices outside sig.
BladeProduct blade_product(Blade a, Blade b, const Signature& sig);

/// Same as blade_product without the range check (hot loops).
inline BladeProduct blade_product_unchecked(Blade a, Blade b, std::uint64_t negative_mask) {
  int sign = reorder_sign(a.mask, b.mask);
  if (std::popcount(a.mask & b.mask & negative_mask) & 1) sign = -sign;
  return {sign, Blade(a.mask ^ b.mask)};
}

/// Square of a blade: (-1)^{k(k-1)/2} times the product of generator squares.
int blade_square(Blade b, const Signature& sig);

/// True when e_A e_B = e_B e_A.
bool blades_commute(Blade a, Blade b);

/// Sign of the grade involution, reversion and Clifford conjugation on a grade-k blade.
inline int grade_involution_sign(int k) { return (k & 1) ? -1 : 1; }
inline int reversion_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }
inline int conjugation_sign(int k) { return grade_involution_sign(k) * reversion_sign(k); }

/// The 2^{n-1} even blades of sig, ordered by (grade, mask).
std::vector<Blade> even_subalgebra_basis(const Signature& sig);

/// All 2^n blades ordered by (grade, mask).
std::vector<Blade> all_blades(const Signature& sig);

/// (-1)^{n(n-1)/2 + q}: the square of e1 e2 ... en, valid for any p, q.
int omega_square_formula(int p, int q);

}  // namespace cliff
