#include "cliff/blade.hpp"
#include "cliff/multivector.hpp"

#include <algorithm>

namespace cliff {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (p + q > kMaxGenerators) throw std::invalid_argument("signature exceeds 63 generators");
}

std::uint64_t Signature::full_mask() const {
  return n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n()) - 1;
}

std::uint64_t Signature::negative_mask() const {
  return full_mask() & ~((std::uint64_t{1} << p) - 1);
}

std::string Signature::name() const {
  return "Cl(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

Blade Blade::generator(int index) {
  if (index < 1 || index > kMaxGenerators) throw std::out_of_range("generator index out of range");
  return Blade(std::uint64_t{1} << (index - 1));
}

Blade Blade::from_indices(const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    const std::uint64_t bit = generator(i).mask;
    if (mask & bit) throw std::invalid_argument("repeated generator index in blade");
    mask |= bit;
  }
  return Blade(mask);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Blade::name() const {
  if (mask == 0) return "1";
  std::string s = "e";
  const auto idx = indices();
  const bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; });
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) s += '_';
    s += std::to_string(idx[k]);
  }
  return s;
}

BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  const std::uint64_t full = sig.full_mask();
  if ((a.mask & ~full) || (b.mask & ~full))
    throw std::out_of_range("blade index out of range for " + sig.name());
  return blade_product_unchecked(a, b, sig.negative_mask());
}

int blade_square(Blade b, const Signature& sig) {
  return blade_product(b, b, sig).sign;
}

bool blades_commute(Blade a, Blade b) {
  return reorder_sign(a.mask, b.mask) == reorder_sign(b.mask, a.mask);
}

std::vector<Blade> all_blades(const Signature& sig) {
  if (sig.n() > 30) throw std::invalid_argument("refusing to enumerate more than 2^30 blades");
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << sig.n());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sig.n()); ++m) out.emplace_back(m);
  std::stable_sort(out.begin(), out.end(), [](Blade x, Blade y) {
    return x.grade() != y.grade() ? x.grade() < y.grade() : x.mask < y.mask;
  });
  return out;
}

std::vector<Blade> even_subalgebra_basis(const Signature& sig) {
  std::vector<Blade> out;
  for (Blade b : all_blades(sig))
    if (b.is_even()) out.push_back(b);
  return out;
}

int omega_square_formula(int p, int q) {
  const long long n = static_cast<long long>(p) + q;
  const long long exponent = n * (n - 1) / 2 + q;
  return (exponent & 1) ? -1 : 1;
}

ComplexMultivector complexify(const RealMultivector& x) {
  ComplexMultivector out(x.sig());
  for (const auto& [m, c] : x.terms()) out.add_term(Blade(m), GaussRational(c));
  return out;
}

RealMultivector volume_element(const Signature& sig) {
  return RealMultivector(sig, Blade(sig.full_mask()));
}

int omega_square(const Signature& sig) {
  const RealMultivector w = volume_element(sig);
  const RealMultivector sq = w * w;
  if (sq.size() != 1 || !(abs(sq.scalar_part()) == 1))
    throw std::logic_error("volume element square is not a unit scalar");
  return sgn(sq.scalar_part());
}

}  // namespace cliff
