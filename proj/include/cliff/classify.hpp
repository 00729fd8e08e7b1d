#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

/// Division ring of a real Clifford algebra; RR and HH are the doubled rings
/// of the semisimple types.
enum class Ring { R, C, H, RR, HH };

std::string ring_name(Ring r);  // "R", "C", "H", "R⊕R", "H⊕H"
Ring ring_from_name(const std::string& name);
bool is_double(Ring r);
// Real dimension of one simple component's division ring.
int ring_component_dim(Ring r);

/// Classification record of Cl(p,q), from the mod-8 rules.
struct AlgebraClass {
  int p = 0;
  int q = 0;
  int type_mod8 = 0;  // (p - q) mod 8
  Ring ring = Ring::R;
  bool simple = true;
  int matrix_log2 = 0;  // Cl ≅ Mat_{2^m}(K) (or a sum of two such)
  int omega_sq = 1;
  bool n_odd = false;

  int n() const { return p + q; }
  // 2^m; throws std::overflow_error when m >= 63.
  std::uint64_t matrix_rank() const;
  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

/// Radon-Hurwitz numbers r_i for any integer i: 0,1,2,2,3,3,3,3 and r_{i+8} = r_i + 4.
long long radon_hurwitz(long long i);

/// k = q - r_{q-p}, the number of factors in a primitive idempotent.
long long idempotent_factor_count(long long p, long long q);

/// Works for any p, q >= 0 (omega_sq from the blade engine when p+q <= 63,
/// otherwise from the closed form).
AlgebraClass algebra_type(int p, int q);

struct IdempotentData {
  Signature sig;
  RealMultivector f;
  std::vector<Blade> generators;
  int k = 0;
  std::uint64_t group_order = 1;  // |T_{p,q}(f)| = 2^{k+1}

  IdempotentData() : f(Signature{}) {}
};

/// Deterministic search for k = q - r_{q-p} commuting square-one blades,
/// taken in (grade, mask) order, greedy with backtracking. Throws
/// VerificationFailure if no such set exists or f*f != f.
IdempotentData primitive_idempotent(int p, int q);

/// The idempotent built from a fixed set of blades, all signs "+".
RealMultivector idempotent_product(const Signature& sig, const std::vector<Blade>& generators);

struct DivisionRingData {
  int dim_fkf = 0;  // real dimension of f Cl f (one component)
  Ring ring = Ring::R;
  bool double_ring = false;
};

/// Brute-force division ring: exact rank of span{f b f}; semisimple types are
/// split by the central idempotents (1 ± ω)/2 first.
DivisionRingData division_ring_of(int p, int q);

struct MinimalLeftIdeal {
  std::vector<RealMultivector> basis;
  int dim = 0;
};

/// Basis of Cl(p,q) f from the exact echelon form of {b f}.
MinimalLeftIdeal minimal_left_ideal(int p, int q);

/// (1 + ω)/2 and (1 - ω)/2; only idempotent when ω² = +1.
std::pair<RealMultivector, RealMultivector> central_idempotents(const Signature& sig);

/// The idempotent ½(1+e1)·½(1+i e23) of the complexified Cl(1,3)
/// (timelike e1; e23 is the spatial bivector written e12 in e0-based numbering).
ComplexMultivector dirac_idempotent();

/// Φ = φ·½(1+e1)·½(1+i e23) for an even φ in Cl(1,3).
ComplexMultivector dirac_from_hestenes(const RealMultivector& phi);

}  // namespace cliff
