#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

/// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(long long twice) { return HalfInt(twice); }
  static HalfInt parse(const std::string& text);  // "3", "3/2", "-1/2"

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double value() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(long long twice) : twice_(twice) {}
  long long twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

HalfInt abs(HalfInt x);

enum class RepField { real, quaternionic };
std::string field_name(RepField f);    // "real", "quaternionic"
std::string field_letter(RepField f);  // "r", "q"

/// τ_{l,l̇} with k = 2l plain and r = 2l̇ conjugated two-spinor factors.
struct RepLabel {
  HalfInt l;
  HalfInt l_dot;
  RepField field = RepField::real;
  bool quotient = false;

  long long k() const { return l.twice(); }
  long long r() const { return l_dot.twice(); }
  HalfInt spin() const { return abs(l - l_dot); }
  long long degree() const { return (k() + 1) * (r() + 1); }
  long long spinspace_log2() const { return k() + r(); }
  // 2^{k+r}; throws std::overflow_error past 2^63.
  std::uint64_t spinspace_dim() const;
  /// -|l-l̇|, ..., |l-l̇| in unit steps.
  std::vector<HalfInt> spin_values() const;
  std::string name() const;  // "τ^q_{0,1/2}", "^ετ^r_{0,0}"

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Field of τ_{l,l̇}: the division ring of Cl(4l, 4l̇).
RepField rep_field(HalfInt l, HalfInt l_dot);
RepLabel rep_label(long long k, long long r);

struct WalkEntry {
  int q = 0;
  int hour = 0;
  int cycle = 0;
  RepLabel label;
};

/// Labels along Cl(0,q), q = 0..8n: even q gives τ_{0,q/4}, odd q the
/// quotient of the preceding label.
std::vector<WalkEntry> bw_rep_walk(int cycles);
/// The nine labels of cycle c >= 1 (q = 8(c-1) .. 8c).
std::vector<RepLabel> bw_rep_cycle(int c);

struct QuotientReport {
  int q = 0;
  int omega_sq = 0;          // square of e1...eq in the real algebra
  bool complexified = false;  // j = iω when ω² = -1, j = ω otherwise
  ComplexMultivector lambda_plus;
  ComplexMultivector lambda_minus;
  bool idempotent = false;
  bool orthogonal = false;
  bool complete = false;
  bool central = false;
  bool kernel_is_ideal = false;
  bool kernel_matches_lambda = false;
  bool image_faithful = false;  // b -> λ⁺b is injective on Cl(0,q-1)
  std::size_t kernel_dim = 0;
  std::size_t quotient_dim = 0;

  QuotientReport() : lambda_plus(Signature{}), lambda_minus(Signature{}) {}
  bool ok() const;
};

/// Central idempotents λ± = (1 ± j)/2 of Cl(0,q), q odd, and the kernel
/// span{b - j b : b in Cl(0,q-1)} of the projection onto one component.
QuotientReport quotient_structure(int q);

struct SpinChain {
  HalfInt l;
  HalfInt l_dot;
  std::vector<RepLabel> members;
  std::vector<HalfInt> spins;  // signed l_i - l̇_i
};

/// τ_{l,l̇}, τ_{l+½,l̇-½}, ..., τ_{l̇,l}; requires l <= l̇.
SpinChain spin_chain(HalfInt l, HalfInt l_dot);

struct TensorAlgebraDescriptor {
  long long k = 0;  // plain ℂ₂ factors
  long long r = 0;  // conjugated factors
  std::uint64_t spinspace_dim() const;
  std::string name() const;
};

std::vector<TensorAlgebraDescriptor> chain_algebra_sequence(const SpinChain& chain);

struct RepresentationBlock {
  int order = 1;
  std::vector<RepLabel> nodes;  // sorted by (l̇, l, quotient)
  bool contains(const RepLabel& label) const;
};

/// Order 1: every τ_{l,l̇} with 0 <= l, l̇ <= 2. Order 2: the eight
/// main-diagonal blocks [2b, 2b+2]² plus the walk labels along l = 0.
RepresentationBlock representation_block(int order);

}  // namespace cliff
