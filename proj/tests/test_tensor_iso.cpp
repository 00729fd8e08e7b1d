#include <doctest.h>

#include <random>

#include "cliff/classify.hpp"
#include "cliff/tensor_iso.hpp"
#include "oracle.hpp"

using namespace cliff;

namespace {

std::vector<int> bits_to_indices(std::uint64_t m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i + 1);
  return out;
}

std::uint64_t indices_to_bits(const std::vector<int>& idx) {
  std::uint64_t m = 0;
  for (int i : idx) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::vector<int> concat_squares(const Signature& a, const Signature& b) {
  auto s = oracle::squares_of(a.p, a.q);
  const auto t = oracle::squares_of(b.p, b.q);
  s.insert(s.end(), t.begin(), t.end());
  return s;
}

int oracle_square(const std::vector<int>& word, const std::vector<int>& squares) {
  const auto [sign, rest] = oracle::blade_product(word, word, squares);
  REQUIRE(rest.empty());
  return sign;
}

}  // namespace

TEST_CASE("graded tensor products agree with the concatenated-generator oracle") {
  for (int na = 0; na <= 3; ++na)
    for (int pa = 0; pa <= na; ++pa)
      for (int nb = 0; nb <= 3; ++nb)
        for (int pb = 0; pb <= nb; ++pb) {
          const Signature a(pa, na - pa), b(pb, nb - pb);
          const auto alg = TensorAlgebra::make({a, b}, true);
          const auto squares = concat_squares(a, b);
          const std::uint64_t full = (std::uint64_t{1} << (na + nb)) - 1;
          for (std::uint64_t x = 0; x <= full; ++x)
            for (std::uint64_t y = 0; y <= full; ++y) {
              const auto got = alg->product(x, y);
              const auto [sign, word] = oracle::blade_product(bits_to_indices(x), bits_to_indices(y), squares);
              REQUIRE(got.sign == sign);
              REQUIRE(got.blade.mask == indices_to_bits(word));
            }
        }
}

TEST_CASE("ordinary tensor products multiply factor-wise") {
  const Signature a(1, 1), b(0, 2);
  const auto alg = TensorAlgebra::make({a, b}, false);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) {
      const auto pa = oracle::blade_product(bits_to_indices(x & 3), bits_to_indices(y & 3), oracle::squares_of(1, 1));
      const auto pb = oracle::blade_product(bits_to_indices(x >> 2), bits_to_indices(y >> 2), oracle::squares_of(0, 2));
      const auto got = alg->product(x, y);
      REQUIRE(got.sign == pa.first * pb.first);
      REQUIRE(got.blade.mask == (indices_to_bits(pa.second) | indices_to_bits(pb.second) << 2));
    }
  CHECK(alg->key_name(alg->embed(0, Blade::from_indices({1, 2}))) == "e12⊗1");
}

TEST_CASE("Chevalley examples") {
  auto pr = graded_tensor_check(Signature(0, 1), Signature(0, 1));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(0, 2));
  pr = graded_tensor_check(Signature(1, 1), Signature(1, 1));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(2, 2));
  CHECK(pr.rank == 16);
  pr = graded_tensor_check(Signature(1, 0), Signature(0, 3));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(1, 3));
  CHECK(pr.rank == 16);
}

TEST_CASE("Chevalley sweep over all 100 small pairs") {
  int count = 0;
  for (int na = 0; na <= 3; ++na)
    for (int pa = 0; pa <= na; ++pa)
      for (int nb = 0; nb <= 3; ++nb)
        for (int pb = 0; pb <= nb; ++pb) {
          const auto pr = graded_tensor_check(Signature(pa, na - pa), Signature(pb, nb - pb));
          CHECK(pr.ok());
          CHECK(pr.target == Signature(pa + pb, na - pa + nb - pb));
          ++count;
        }
  CHECK(count == 100);
}

TEST_CASE("Karoubi examples") {
  auto pr = karoubi_check(Signature(1, 1), Signature(0, 2));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(1, 3));
  pr = karoubi_check(Signature(1, 1), Signature(2, 0));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(3, 1));
  pr = karoubi_check(Signature(0, 2), Signature(1, 1));
  CHECK(pr.ok());
  CHECK(pr.target == Signature(1, 3));
  CHECK_THROWS_AS(karoubi_check(Signature(1, 0), Signature(1, 1)), std::invalid_argument);
}

TEST_CASE("Karoubi sweep") {
  for (int na = 0; na <= 4; na += 2)
    for (int pa = 0; pa <= na; ++pa)
      for (int nb = 0; nb <= 3; ++nb)
        for (int pb = 0; pb <= nb; ++pb) {
          const Signature a(pa, na - pa), b(pb, nb - pb);
          const auto pr = karoubi_check(a, b);
          CHECK(pr.ok());
          const bool positive = omega_square(a) == 1;
          const Signature expect = positive ? Signature(pa + pb, a.q + b.q) : Signature(pa + b.q, a.q + pb);
          CHECK(pr.target == expect);
        }
}

TEST_CASE("complex tensor products") {
  for (int m = 1; m <= 3; ++m) {
    const auto pr = complex_tensor_check(m);
    CHECK(pr.ok());
    CHECK(pr.rank == (std::size_t{1} << (2 * m)));
  }
  CHECK(complex_tensor_check(3).rank == 64);
  CHECK_THROWS(complex_tensor_check(5));
}

TEST_CASE("even subalgebra examples") {
  auto pr = even_iso_check(1, 3, Signature(3, 0));
  CHECK(pr.ok());
  pr = even_iso_check(4, 1, Signature(1, 3));
  CHECK(pr.ok());
  pr = even_iso_check(2, 4, Signature(4, 1));
  CHECK(pr.ok());
  CHECK(pr.rank == 32);
}

TEST_CASE("even subalgebra sweep for p+q <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      CAPTURE(p);
      CAPTURE(q);
      const auto pr = even_iso_check(p, q);
      REQUIRE(pr.ok());
      CHECK(pr.target.n() == n - 1);
      CHECK(pr.rank == (std::size_t{1} << (n - 1)));
      if (p >= 1) CHECK(even_iso_check(p, q, EvenIsoKind::isom1).target == Signature(q, p - 1));
      if (q >= 1) CHECK(even_iso_check(p, q, EvenIsoKind::isom2).target == Signature(p, q - 1));
      if (n - 1 <= 7) CHECK(algebra_type(pr.target.p, pr.target.q).ring == division_ring_of(pr.target.p, pr.target.q).ring);
    }
}

TEST_CASE("phi psi factorizations") {
  const auto r = phi_psi_factorization(Signature(1, 3), Signature(1, 1));
  CHECK(r.ok());
  CHECK(r.phi == RealMultivector(Signature(1, 3), Blade::from_indices({1, 2, 3})));
  CHECK(r.psi == RealMultivector(Signature(1, 3), Blade::from_indices({1, 2, 4})));
  CHECK(r.phi_sq == -1);
  CHECK(r.psi_sq == -1);
  CHECK(r.kind == QuaternionCase::quaternion);
  CHECK(r.quaternion_algebra == Signature(0, 2));
  CHECK(r.commute_with_base);
  for (int i = 1; i <= 2; ++i) {
    CHECK(commutes(r.phi, RealMultivector::generator(Signature(1, 3), i)));
    CHECK(commutes(r.psi, RealMultivector::generator(Signature(1, 3), i)));
  }

  const auto anti = phi_psi_factorization(Signature(5, 1), Signature(4, 0));
  CHECK(anti.ok());
  CHECK(anti.phi_sq == 1);
  CHECK(anti.psi_sq == -1);
  CHECK(anti.kind == QuaternionCase::anti_quaternion);
  CHECK(anti.quaternion_algebra == Signature(1, 1));

  const auto pseudo = phi_psi_factorization(Signature(2, 2), Signature(2, 0));
  CHECK(pseudo.ok());
  CHECK(pseudo.kind == QuaternionCase::pseudo_quaternion);

  CHECK_THROWS(phi_psi_factorization(Signature(1, 2), Signature(1, 0)));
}

TEST_CASE("phi psi squares and rank additivity for all even targets up to 8 generators") {
  for (int n = 2; n <= 8; n += 2)
    for (int p = 0; p <= n; ++p) {
      const Signature t(p, n - p);
      const auto r = phi_psi_factorization(t, phi_psi_base(t));
      CAPTURE(t.name());
      REQUIRE(r.ok());
      std::vector<int> head;
      for (int i = 1; i <= n - 2; ++i) head.push_back(i);
      auto phi_word = head, psi_word = head;
      phi_word.push_back(n - 1);
      psi_word.push_back(n);
      const auto squares = oracle::squares_of(p, n - p);
      CHECK(r.phi_sq == oracle_square(phi_word, squares));
      CHECK(r.psi_sq == oracle_square(psi_word, squares));
      std::size_t sum = 0;
      for (auto c : r.component_ranks) sum += c;
      CHECK(sum == r.span_rank);
      CHECK(r.span_rank == (std::size_t{1} << n));
    }
}

TEST_CASE("block matrix form") {
  const Signature t(1, 3);
  const auto f = phi_psi_factorization(t, phi_psi_base(t));
  const Signature base = f.base;
  const ComplexMultivector zero(base), one(base, GaussRational(1)), minus_one(base, GaussRational(-1));
  const ComplexMultivector i_unit(base, GaussRational::i());

  auto m = block_matrix_form(f, RealMultivector(t, Rational(1)));
  CHECK(m.entries[0] == one);
  CHECK(m.entries[1] == zero);
  CHECK(m.entries[2] == zero);
  CHECK(m.entries[3] == one);

  m = block_matrix_form(f, f.phi);
  CHECK(m.entries[0] == zero);
  CHECK(m.entries[1] == minus_one);
  CHECK(m.entries[2] == one);
  CHECK(m.entries[3] == zero);

  m = block_matrix_form(f, f.psi);
  CHECK(m.entries[0] == zero);
  CHECK(m.entries[1] == i_unit);
  CHECK(m.entries[2] == i_unit);
  CHECK(m.entries[3] == zero);

  std::mt19937_64 rng(5);
  const auto rep = block_matrix_check(1, 3, 100, rng);
  CHECK(rep.passed == 100);
  CHECK(rep.ok());

  const auto pseudo = phi_psi_factorization(Signature(2, 2), Signature(2, 0));
  CHECK_THROWS(block_matrix_form(pseudo, RealMultivector(Signature(2, 2), Rational(1))));
}

TEST_CASE("component decomposition reassembles the element") {
  const Signature t(1, 3);
  const auto f = phi_psi_factorization(t, phi_psi_base(t));
  std::mt19937_64 rng(9);
  for (int s = 0; s < 30; ++s) {
    const auto x = random_multivector(t, rng);
    const auto c = phi_psi_components(f, x);
    auto lift = [&](const RealMultivector& a) {
      RealMultivector out(t);
      for (const auto& [m, v] : a.terms()) out.add_term(Blade(m), v);
      return out;
    };
    RealMultivector back = lift(c[0]) + lift(c[1]) * f.phi + lift(c[2]) * f.psi + lift(c[3]) * f.phipsi;
    CHECK(back == x);
  }
}

TEST_CASE("Spin(2,4) chain") {
  const auto rep = spin24_chain();
  CHECK(rep.ok());
  REQUIRE(rep.links.size() == 5);
  for (const auto& l : rep.links) CHECK(l.ok);
  CHECK(algebra_type(4, 1).ring == Ring::C);
  CHECK(omega_square(Signature(4, 1)) == -1);
}
