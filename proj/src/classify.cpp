#include "cliff/classify.hpp"

#include <array>
#include <functional>

#include "cliff/errors.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

namespace {

constexpr std::array<long long, 8> kRadonHurwitzBase{0, 1, 2, 2, 3, 3, 3, 3};

int mod8(long long x) { return static_cast<int>(((x % 8) + 8) % 8); }

Ring ring_for_type(int type) {
  switch (type) {
    case 0:
    case 2: return Ring::R;
    case 3:
    case 7: return Ring::C;
    case 4:
    case 6: return Ring::H;
    case 1: return Ring::RR;
    default: return Ring::HH;
  }
}

int log2_dim(int d) { return d == 1 ? 0 : d == 2 ? 1 : 2; }

// GF(2) independence of blade masks (the sign group generated by the
// blades has order 2^k exactly when no nonempty product is ±1).
bool independent_masks(const std::vector<Blade>& chosen, Blade extra) {
  std::vector<std::uint64_t> basis;
  auto insert = [&basis](std::uint64_t v) {
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis.push_back(v);
    return true;
  };
  for (Blade b : chosen) insert(b.mask);
  return insert(extra.mask);
}

SparseVector<Rational> as_vector(const RealMultivector& x) {
  return SparseVector<Rational>(x.terms().begin(), x.terms().end());
}

RealMultivector from_vector(const Signature& sig, const SparseVector<Rational>& v) {
  RealMultivector out(sig);
  for (const auto& [m, c] : v) out.add_term(Blade(m), c);
  return out;
}

int span_dim_fbf(const Signature& sig, const RealMultivector& f) {
  SpanBuilder<Rational> span;
  for (Blade b : all_blades(sig)) span.add(as_vector(f * RealMultivector(sig, b) * f));
  return static_cast<int>(span.rank());
}

}  // namespace

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
    case Ring::RR: return "R⊕R";
    case Ring::HH: return "H⊕H";
  }
  return "?";
}

Ring ring_from_name(const std::string& name) {
  for (Ring r : {Ring::R, Ring::C, Ring::H, Ring::RR, Ring::HH})
    if (ring_name(r) == name) return r;
  throw std::invalid_argument("unknown ring name: " + name);
}

bool is_double(Ring r) { return r == Ring::RR || r == Ring::HH; }

int ring_component_dim(Ring r) {
  switch (r) {
    case Ring::R:
    case Ring::RR: return 1;
    case Ring::C: return 2;
    default: return 4;
  }
}

std::uint64_t AlgebraClass::matrix_rank() const {
  if (matrix_log2 >= 63) throw std::overflow_error("matrix rank 2^" + std::to_string(matrix_log2) + " overflows");
  return std::uint64_t{1} << matrix_log2;
}

long long radon_hurwitz(long long i) {
  const int base = mod8(i);
  const long long shift = (i - base) / 8;  // exact: i - base is a multiple of 8
  return kRadonHurwitzBase[base] + 4 * shift;
}

long long idempotent_factor_count(long long p, long long q) {
  return q - radon_hurwitz(q - p);
}

AlgebraClass algebra_type(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("algebra_type: p, q must be non-negative");
  AlgebraClass c;
  c.p = p;
  c.q = q;
  c.type_mod8 = mod8(static_cast<long long>(p) - q);
  c.ring = ring_for_type(c.type_mod8);
  c.simple = !is_double(c.ring);
  c.n_odd = ((p + q) & 1) != 0;
  c.omega_sq = (p + q <= kMaxGenerators) ? omega_square(Signature(p, q)) : omega_square_formula(p, q);
  const int twice_m = p + q - log2_dim(ring_component_dim(c.ring)) - (c.simple ? 0 : 1);
  if (twice_m < 0 || (twice_m & 1))
    throw VerificationFailure("dimension bookkeeping fails for Cl(" + std::to_string(p) + "," + std::to_string(q) + ")");
  c.matrix_log2 = twice_m / 2;
  return c;
}

RealMultivector idempotent_product(const Signature& sig, const std::vector<Blade>& generators) {
  const Rational half(1, 2);
  RealMultivector f(sig, Rational(1));
  for (Blade b : generators) {
    RealMultivector factor(sig, Rational(1));
    factor.add_term(b, Rational(1));
    f = f * (factor * half);
  }
  return f;
}

IdempotentData primitive_idempotent(int p, int q) {
  const Signature sig(p, q);
  const long long k = idempotent_factor_count(p, q);
  if (k < 0 || k > sig.n())
    throw VerificationFailure("idempotent factor count out of range for " + sig.name());

  std::vector<Blade> candidates;
  for (Blade b : all_blades(sig))
    if (b.mask != 0 && blade_square(b, sig) == 1) candidates.push_back(b);

  std::vector<Blade> chosen;
  std::size_t budget = 5'000'000;
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (static_cast<long long>(chosen.size()) == k) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (--budget == 0) return false;
      const Blade c = candidates[i];
      bool ok = true;
      for (Blade b : chosen)
        if (!blades_commute(b, c)) {
          ok = false;
          break;
        }
      if (!ok || !independent_masks(chosen, c)) continue;
      chosen.push_back(c);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0))
    throw VerificationFailure("no commuting set of " + std::to_string(k) + " square-one blades in " + sig.name());

  IdempotentData out;
  out.sig = sig;
  out.generators = chosen;
  out.k = static_cast<int>(k);
  out.f = idempotent_product(sig, chosen);
  if (!(out.f * out.f == out.f)) throw VerificationFailure("f*f != f in " + sig.name());

  // Enumerate the sign group generated by the chosen blades.
  std::vector<std::pair<int, Blade>> group{{1, Blade{}}};
  for (Blade g : chosen) {
    const std::size_t size = group.size();
    for (std::size_t i = 0; i < size; ++i) {
      const auto prod = blade_product(group[i].second, g, sig);
      group.emplace_back(group[i].first * prod.sign, prod.blade);
    }
  }
  for (std::size_t i = 1; i < group.size(); ++i)
    if (group[i].second.mask == 0) throw VerificationFailure("idempotent generators are dependent in " + sig.name());
  if (group.size() != (std::size_t{1} << k)) throw VerificationFailure("sign group has wrong order in " + sig.name());
  // Adjoining -1 doubles the group: T_{p,q}(f) ≅ (Z2)^{k+1}.
  out.group_order = std::uint64_t{2} * group.size();
  return out;
}

std::pair<RealMultivector, RealMultivector> central_idempotents(const Signature& sig) {
  const RealMultivector one(sig, Rational(1));
  const RealMultivector w = volume_element(sig);
  const Rational half(1, 2);
  return {(one + w) * half, (one - w) * half};
}

DivisionRingData division_ring_of(int p, int q) {
  const Signature sig(p, q);
  const IdempotentData idem = primitive_idempotent(p, q);
  DivisionRingData out;
  out.dim_fkf = span_dim_fbf(sig, idem.f);

  const RealMultivector w = volume_element(sig);
  bool central = true;
  for (int i = 1; i <= sig.n() && central; ++i) central = commutes(w, RealMultivector::generator(sig, i));
  out.double_ring = sig.n() % 2 == 1 && central && omega_square(sig) == 1;

  if (out.double_ring) {
    const auto [plus, minus] = central_idempotents(sig);
    if (!(plus * plus == plus) || !(minus * minus == minus) || !(plus * minus).is_zero())
      throw VerificationFailure("central idempotents fail in " + sig.name());
    const bool in_plus = idem.f * plus == idem.f;
    const bool in_minus = idem.f * minus == idem.f;
    if (in_plus == in_minus) throw VerificationFailure("primitive idempotent straddles both components of " + sig.name());
    // The grade involution sends ω to -ω for odd n, swapping the components.
    const RealMultivector g = involute(idem.f, Involution::grade_involution);
    const RealMultivector& other = in_plus ? minus : plus;
    if (!(g * other == g) || span_dim_fbf(sig, g) != out.dim_fkf)
      throw VerificationFailure("components of " + sig.name() + " disagree");
  }

  switch (out.dim_fkf) {
    case 1: out.ring = out.double_ring ? Ring::RR : Ring::R; break;
    case 2:
      if (out.double_ring) throw VerificationFailure("doubled complex ring in " + sig.name());
      out.ring = Ring::C;
      break;
    case 4: out.ring = out.double_ring ? Ring::HH : Ring::H; break;
    default:
      throw VerificationFailure("f Cl f has dimension " + std::to_string(out.dim_fkf) + " in " + sig.name());
  }
  return out;
}

MinimalLeftIdeal minimal_left_ideal(int p, int q) {
  const Signature sig(p, q);
  const IdempotentData idem = primitive_idempotent(p, q);
  SpanBuilder<Rational> span;
  for (Blade b : all_blades(sig)) span.add(as_vector(RealMultivector(sig, b) * idem.f));
  MinimalLeftIdeal out;
  for (const auto& row : span.basis()) out.basis.push_back(from_vector(sig, row));
  out.dim = static_cast<int>(span.rank());
  return out;
}

ComplexMultivector dirac_idempotent() {
  const Signature sig(1, 3);
  const GaussRational half(Rational(1, 2));
  ComplexMultivector a(sig, GaussRational(1));
  a.add_term(Blade::generator(1), GaussRational(1));
  ComplexMultivector b(sig, GaussRational(1));
  b.add_term(Blade::from_indices({2, 3}), GaussRational::i());
  return (a * half) * (b * half);
}

ComplexMultivector dirac_from_hestenes(const RealMultivector& phi) {
  if (!(phi.sig() == Signature(1, 3))) throw std::invalid_argument("Dirac-Hestenes spinor must live in Cl(1,3)");
  if (!is_even(phi)) throw std::invalid_argument("Dirac-Hestenes spinor must be even");
  return complexify(phi) * dirac_idempotent();
}

}  // namespace cliff
