#include <doctest.h>

#include <random>

#include "cliff/classify.hpp"
#include "oracle.hpp"

using namespace cliff;

namespace {

// Independent Radon-Hurwitz: count the powers-of-two rule by walking in unit steps.
long long rh_by_steps(long long i) {
  static const long long base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  long long r = 0;
  long long j = i;
  while (j < 0) {
    j += 8;
    r -= 4;
  }
  while (j >= 8) {
    j -= 8;
    r += 4;
  }
  return r + base[j];
}

}  // namespace

TEST_CASE("radon_hurwitz examples") {
  CHECK(radon_hurwitz(3) == 2);
  CHECK(radon_hurwitz(9) == 5);
  CHECK(radon_hurwitz(-2) == -1);
  CHECK(idempotent_factor_count(2, 0) == 1);
  for (long long i = -16; i <= 64; ++i) {
    CHECK(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4);
    CHECK(radon_hurwitz(i) == rh_by_steps(i));
  }
}

TEST_CASE("algebra_type examples") {
  const auto a = algebra_type(1, 3);
  CHECK(a.type_mod8 == 6);
  CHECK(a.ring == Ring::H);
  CHECK(a.simple);
  CHECK(a.matrix_rank() == 2);

  const auto b = algebra_type(4, 1);
  CHECK(b.type_mod8 == 3);
  CHECK(b.ring == Ring::C);
  CHECK(b.matrix_rank() == 4);

  const auto c = algebra_type(0, 3);
  CHECK(c.type_mod8 == 5);
  CHECK(c.ring == Ring::HH);
  CHECK_FALSE(c.simple);
  CHECK(ring_name(c.ring) == "H⊕H");
  CHECK(ring_from_name("R⊕R") == Ring::RR);
  CHECK_THROWS_AS(ring_from_name("O"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_type(-1, 2), std::invalid_argument);
}

TEST_CASE("algebra_type dimension bookkeeping") {
  for (int p = 0; p <= 20; ++p)
    for (int q = 0; q <= 20; ++q) {
      const auto c = algebra_type(p, q);
      CHECK(c.simple == (c.type_mod8 != 1 && c.type_mod8 != 5));
      const int lhs = 2 * c.matrix_log2 + (ring_component_dim(c.ring) == 1 ? 0 : ring_component_dim(c.ring) == 2 ? 1 : 2) +
                      (c.simple ? 0 : 1);
      CHECK(lhs == p + q);
      if ((p + q) % 2 == 1) CHECK(c.n_odd);
    }
  CHECK_THROWS_AS(algebra_type(100, 40).matrix_rank(), std::overflow_error);
}

TEST_CASE("primitive_idempotent examples") {
  const auto a = primitive_idempotent(1, 3);
  CHECK(a.k == 1);
  const Signature s13(1, 3);
  CHECK(a.f == (RealMultivector(s13, Rational(1)) + RealMultivector::generator(s13, 1)) * Rational(1, 2));

  const auto b = primitive_idempotent(0, 2);
  CHECK(b.k == 0);
  CHECK(b.f == RealMultivector(Signature(0, 2), Rational(1)));

  const auto c = primitive_idempotent(2, 0);
  CHECK(c.k == 1);
  CHECK(c.group_order == 4);
  const Signature s20(2, 0);
  CHECK(c.f == (RealMultivector(s20, Rational(1)) + RealMultivector::generator(s20, 1)) * Rational(1, 2));
}

TEST_CASE("primitive idempotents for p+q <= 9") {
  for (int p = 0; p <= 7; ++p)
    for (int q = 0; q <= 7 && p + q <= 9; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto d = primitive_idempotent(p, q);
      const Signature sig(p, q);
      REQUIRE(d.f * d.f == d.f);
      REQUIRE(d.k == q - rh_by_steps(q - p));
      REQUIRE(d.group_order == (std::uint64_t{2} << d.k));
      for (std::size_t i = 0; i < d.generators.size(); ++i) {
        const RealMultivector gi(sig, d.generators[i]);
        REQUIRE(gi * gi == RealMultivector(sig, Rational(1)));
        for (std::size_t j = i + 1; j < d.generators.size(); ++j)
          REQUIRE(commutes(gi, RealMultivector(sig, d.generators[j])));
      }
    }
}

TEST_CASE("division ring examples") {
  auto d = division_ring_of(0, 2);
  CHECK(d.dim_fkf == 4);
  CHECK(d.ring == Ring::H);
  d = division_ring_of(1, 3);
  CHECK(d.dim_fkf == 4);
  CHECK(d.ring == Ring::H);
  d = division_ring_of(2, 0);
  CHECK(d.dim_fkf == 1);
  CHECK(d.ring == Ring::R);
}

TEST_CASE("brute-force division ring agrees with the table for p+q <= 9") {
  for (int p = 0; p <= 9; ++p)
    for (int q = 0; p + q <= 9; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(division_ring_of(p, q).ring == algebra_type(p, q).ring);
    }
}

TEST_CASE("minimal left ideals") {
  CHECK(minimal_left_ideal(1, 3).dim == 8);
  CHECK(minimal_left_ideal(0, 2).dim == 4);
  CHECK(minimal_left_ideal(4, 1).dim == 8);
  CHECK(primitive_idempotent(4, 1).k == 2);
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q) {
      const auto c = algebra_type(p, q);
      if (!c.simple) continue;
      const auto ideal = minimal_left_ideal(p, q);
      CHECK((ideal.dim << primitive_idempotent(p, q).k) == (1 << (p + q)));
      CHECK(static_cast<std::uint64_t>(ideal.dim) == c.matrix_rank() * ring_component_dim(c.ring));
    }
}

TEST_CASE("central idempotents of semisimple types") {
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q) {
      const auto c = algebra_type(p, q);
      if (c.simple) continue;
      const Signature sig(p, q);
      const auto w = volume_element(sig);
      CHECK(w * w == RealMultivector(sig, Rational(1)));
      for (int i = 1; i <= sig.n(); ++i) CHECK(commutes(w, RealMultivector::generator(sig, i)));
      const auto [lp, lm] = central_idempotents(sig);
      CHECK(lp * lp == lp);
      CHECK(lm * lm == lm);
      CHECK((lp * lm).is_zero());
      CHECK(lp + lm == RealMultivector(sig, Rational(1)));
    }
}

TEST_CASE("Dirac spinor from a Hestenes spinor") {
  const Signature sig(1, 3);
  const ComplexMultivector f = dirac_idempotent();
  CHECK(f * f == f);
  CHECK(dirac_from_hestenes(RealMultivector(sig, Rational(1))) == f);

  const RealMultivector e12(sig, Blade::from_indices({1, 2}));
  const ComplexMultivector phi12 = dirac_from_hestenes(e12);
  CHECK(phi12 == complexify(e12) * f);
  CHECK(phi12 * f == phi12);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const RealMultivector a = even_part(oracle::random_element(sig, rng, 8));
    const RealMultivector b = even_part(oracle::random_element(sig, rng, 8));
    const ComplexMultivector pa = dirac_from_hestenes(a);
    CHECK(pa * f == pa);
    CHECK(dirac_from_hestenes(a + b) == pa + dirac_from_hestenes(b));
  }
  CHECK_THROWS_AS(dirac_from_hestenes(RealMultivector::generator(sig, 1)), std::invalid_argument);
  CHECK_THROWS_AS(dirac_from_hestenes(RealMultivector(Signature(4, 1), Rational(1))), std::invalid_argument);
}
