#include <doctest.h>

#include <random>

#include "cliff/multivector.hpp"
#include "oracle.hpp"

using namespace cliff;

namespace {

Blade B(std::vector<int> idx) { return Blade::from_indices(idx); }

}  // namespace

TEST_CASE("blade products of small examples") {
  auto r = blade_product(B({1}), B({1}), Signature(1, 0));
  CHECK(r.sign == 1);
  CHECK(r.blade == Blade{});
  r = blade_product(B({1, 2}), B({1, 2}), Signature(0, 2));
  CHECK(r.sign == -1);
  CHECK(r.blade == Blade{});
  r = blade_product(B({1, 2}), B({2, 3}), Signature(3, 0));
  CHECK(r.sign == 1);
  CHECK(r.blade == B({1, 3}));
  CHECK_THROWS_AS(blade_product(B({4}), B({1}), Signature(2, 1)), std::out_of_range);
}

TEST_CASE("blade product agrees with the bubble-sort oracle exhaustively for n <= 5") {
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      const auto squares = oracle::squares_of(p, n - p);
      for (Blade a : all_blades(sig))
        for (Blade b : all_blades(sig)) {
          const auto [sign, word] = oracle::blade_product(a.indices(), b.indices(), squares);
          const auto got = blade_product(a, b, sig);
          REQUIRE(got.sign == sign);
          REQUIRE(got.blade.indices() == word);
        }
    }
}

TEST_CASE("multivector products") {
  const Signature s10(1, 0);
  const RealMultivector one(s10, Rational(1));
  const RealMultivector e1 = RealMultivector::generator(s10, 1);
  CHECK(((one + e1) * (one - e1)).is_zero());
  const RealMultivector f = (one + e1) * Rational(1, 2);
  CHECK(f * f == f);

  // φψ in Cl(1,3): the oracle fixes the sign of e34.
  const Signature s13(1, 3);
  const RealMultivector phi(s13, B({1, 2, 3}));
  const RealMultivector psi(s13, B({1, 2, 4}));
  const auto [sign, word] = oracle::blade_product({1, 2, 3}, {1, 2, 4}, oracle::squares_of(1, 3));
  CHECK(word == std::vector<int>{3, 4});
  CHECK(phi * psi == RealMultivector(s13, B({3, 4}), Rational(sign)));
  CHECK(sign == 1);

  CHECK_THROWS_AS(phi * RealMultivector(Signature(3, 1), Rational(1)), std::invalid_argument);
}

TEST_CASE("involutions") {
  const Signature s(3, 0);
  const RealMultivector e12(s, B({1, 2}));
  CHECK(involute(e12, Involution::grade_involution) == e12);
  const RealMultivector e123(s, B({1, 2, 3}));
  CHECK(involute(e123, Involution::reversion) == -e123);
  const RealMultivector x = RealMultivector(s, Rational(1)) + RealMultivector::generator(s, 1) + e12;
  const RealMultivector expect = RealMultivector(s, Rational(1)) - RealMultivector::generator(s, 1) - e12;
  CHECK(involute(x, Involution::conjugation) == expect);
}

TEST_CASE("volume element squares") {
  CHECK(omega_square(Signature(0, 4)) == 1);
  CHECK(omega_square(Signature(1, 3)) == -1);
  CHECK(omega_square(Signature(0, 3)) == 1);
  for (int n = 0; n <= 12; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      CHECK(omega_square(Signature(p, q)) == omega_square_formula(p, q));
      if (n % 2 == 0) {
        const int t = ((p - q) % 8 + 8) % 8;
        CHECK(omega_square(Signature(p, q)) == ((t == 0 || t == 4) ? 1 : -1));
      }
    }
}

TEST_CASE("even parts") {
  const Signature s(2, 0);
  const RealMultivector x =
      RealMultivector(s, Rational(1)) + RealMultivector::generator(s, 1) + RealMultivector(s, B({1, 2}));
  CHECK(even_part(x) == RealMultivector(s, Rational(1)) + RealMultivector(s, B({1, 2})));
  CHECK(even_subalgebra_basis(Signature(1, 3)).size() == 8);
}

TEST_CASE("associativity and reversion on random triples") {
  std::mt19937_64 rng(2024);
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      for (int t = 0; t < 200; ++t) {
        const auto x = oracle::random_element(sig, rng);
        const auto y = oracle::random_element(sig, rng);
        const auto z = oracle::random_element(sig, rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(involute(x * y, Involution::reversion) ==
                involute(y, Involution::reversion) * involute(x, Involution::reversion));
        for (auto k : {Involution::grade_involution, Involution::reversion, Involution::conjugation})
          REQUIRE(involute(involute(x, k), k) == x);
      }
    }
}

TEST_CASE("generator relations exhaustively for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      for (int i = 1; i <= n; ++i) {
        const auto ei = RealMultivector::generator(sig, i);
        REQUIRE(ei * ei == RealMultivector(sig, Rational(i <= p ? 1 : -1)));
        for (int j = i + 1; j <= n; ++j) REQUIRE(anticommutes(ei, RealMultivector::generator(sig, j)));
      }
    }
}

TEST_CASE("volume element centrality") {
  for (int n = 1; n <= 9; ++n)
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      const RealMultivector w = volume_element(sig);
      for (Blade b : all_blades(sig)) {
        const RealMultivector x(sig, b);
        if (b.is_even() || n % 2 == 1) REQUIRE(commutes(w, x));
      }
    }
}

TEST_CASE("grading closure") {
  std::mt19937_64 rng(7);
  const Signature sig(2, 3);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_element(sig, rng);
    const auto y = oracle::random_element(sig, rng);
    const auto xe = even_part(x), xo = odd_part(x), ye = even_part(y), yo = odd_part(y);
    CHECK(is_even(xe * ye));
    CHECK(is_even(xo * yo));
    CHECK(is_odd(xe * yo));
    CHECK(is_odd(xo * ye));
  }
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(40, 24), std::invalid_argument);
  CHECK(Signature(63, 0).n() == 63);
}
