#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cliff/blade.hpp"
#include "cliff/rational.hpp"

namespace cliff {

enum class Involution { grade_involution, reversion, conjugation };

/// A finite linear combination of blades of one signature. Zero coefficients
/// are never stored; terms iterate in ascending mask order.
template <typename Scalar>
class Multivector {
 public:
  using Terms = std::map<std::uint64_t, Scalar>;

  explicit Multivector(Signature sig) : sig_(sig) {}
  Multivector(Signature sig, const Scalar& scalar) : sig_(sig) { add_term(Blade{}, scalar); }
  Multivector(Signature sig, Blade b, const Scalar& c = Scalar(1)) : sig_(sig) {
    check_blade(b);
    add_term(b, c);
  }

  static Multivector generator(Signature sig, int index) { return Multivector(sig, Blade::generator(index)); }

  const Signature& sig() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(Blade b) const {
    auto it = terms_.find(b.mask);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar scalar_part() const { return coefficient(Blade{}); }

  void add_term(Blade b, const Scalar& c) {
    if (cliff::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b.mask, c);
    if (!inserted) {
      it->second += c;
      if (cliff::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(Blade(m), c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(Blade(m), -c);
    return *this;
  }
  Multivector& operator*=(const Scalar& s) {
    if (cliff::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Scalar(-1); }
  friend Multivector operator*(Multivector a, const Scalar& s) { return a *= s; }
  friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }

  /// Geometric product.
  friend Multivector operator*(const Multivector& x, const Multivector& y) {
    x.require_same(y);
    Multivector out(x.sig_);
    const std::uint64_t neg = x.sig_.negative_mask();
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        const auto prod = blade_product_unchecked(Blade(ma), Blade(mb), neg);
        Scalar c = ca * cb;
        if (prod.sign < 0) c = -c;
        out.add_term(prod.blade, c);
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coeff = cliff::to_string(c);
      const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
      if (compound) coeff = "(" + coeff + ")";
      const Blade b(m);
      std::string term;
      if (b.mask == 0)
        term = coeff;
      else if (coeff == "1")
        term = b.name();
      else if (coeff == "-1")
        term = "-" + b.name();
      else
        term = coeff + "*" + b.name();
      if (!first) s += (term.front() == '-') ? " - " + term.substr(1) : " + " + term;
      else s += term;
      first = false;
    }
    return s;
  }

 private:
  void require_same(const Multivector& o) const {
    if (!(sig_ == o.sig_))
      throw std::invalid_argument("signature mismatch: " + sig_.name() + " vs " + o.sig_.name());
  }
  void check_blade(Blade b) const {
    if (b.mask & ~sig_.full_mask()) throw std::out_of_range("blade index out of range for " + sig_.name());
  }

  Signature sig_;
  Terms terms_;
};

using RealMultivector = Multivector<Rational>;
using ComplexMultivector = Multivector<GaussRational>;

template <typename Scalar>
Multivector<Scalar> mv_mul(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return x * y;
}

template <typename Scalar>
Multivector<Scalar> involute(const Multivector<Scalar>& x, Involution kind) {
  Multivector<Scalar> out(x.sig());
  for (const auto& [m, c] : x.terms()) {
    const int k = Blade(m).grade();
    int s = 1;
    switch (kind) {
      case Involution::grade_involution: s = grade_involution_sign(k); break;
      case Involution::reversion: s = reversion_sign(k); break;
      case Involution::conjugation: s = conjugation_sign(k); break;
    }
    out.add_term(Blade(m), s > 0 ? c : Scalar(-c));
  }
  return out;
}

template <typename Scalar>
Multivector<Scalar> even_part(const Multivector<Scalar>& x) {
  Multivector<Scalar> out(x.sig());
  for (const auto& [m, c] : x.terms())
    if (Blade(m).is_even()) out.add_term(Blade(m), c);
  return out;
}

template <typename Scalar>
Multivector<Scalar> odd_part(const Multivector<Scalar>& x) {
  return x - even_part(x);
}

template <typename Scalar>
bool is_even(const Multivector<Scalar>& x) {
  for (const auto& [m, c] : x.terms())
    if (!Blade(m).is_even()) return false;
  return true;
}

template <typename Scalar>
bool is_odd(const Multivector<Scalar>& x) {
  for (const auto& [m, c] : x.terms())
    if (Blade(m).is_even()) return false;
  return true;
}

template <typename Scalar>
bool commutes(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return x * y == y * x;
}

template <typename Scalar>
bool anticommutes(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return (x * y + y * x).is_zero();
}

/// Embed a real multivector into the complexified algebra of the same signature.
ComplexMultivector complexify(const RealMultivector& x);

/// Volume element e1 e2 ... en.
RealMultivector volume_element(const Signature& sig);

/// Square of the volume element computed by the blade engine.
int omega_square(const Signature& sig);

}  // namespace cliff
