#pragma once

#include <gmpxx.h>

#include <string>

namespace cliff {

// Exact rational coefficient (GMP arbitrary precision).
using Rational = mpq_class;

// Gaussian rational a + b i, the coefficient ring of complexified algebras.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of the scalar tower
  GaussRational(long r) : re(r) {}                 // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inverse(); }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }

inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline GaussRational inverse(const GaussRational& x) { return x.inverse(); }

// "p/q" or "p" for rationals; "a+bi" style for Gaussian rationals.
std::string to_string(const Rational& x);
std::string to_string(const GaussRational& x);

// Parses "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

}  // namespace cliff
