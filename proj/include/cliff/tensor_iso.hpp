#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

/// Tensor product of Clifford algebras. Basis keys concatenate the factor
/// masks: factor i occupies bits offset(i) .. offset(i)+n_i-1.
/// graded = true applies the Koszul sign (-1)^{deg b * deg a'}.
class TensorAlgebra {
 public:
  static std::shared_ptr<const TensorAlgebra> make(std::vector<Signature> factors, bool graded);

  const std::vector<Signature>& factors() const { return factors_; }
  bool graded() const { return graded_; }
  int n() const { return n_; }
  int offset(int factor) const { return offsets_.at(factor); }

  BladeProduct product(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t embed(int factor, Blade b) const;
  Blade component(std::uint64_t key, int factor) const;
  std::string key_name(std::uint64_t key) const;  // "e12⊗1"
  std::string name() const;                       // "Cl(1,1)⊗̂Cl(0,2)"

 private:
  TensorAlgebra() = default;
  std::vector<Signature> factors_;
  std::vector<int> offsets_;
  std::vector<std::uint64_t> factor_masks_;
  std::uint64_t negative_mask_ = 0;
  int n_ = 0;
  bool graded_ = false;
};

using TensorAlgebraPtr = std::shared_ptr<const TensorAlgebra>;

template <typename Scalar>
class TensorElement {
 public:
  using Terms = std::map<std::uint64_t, Scalar>;

  explicit TensorElement(TensorAlgebraPtr alg) : alg_(std::move(alg)) {}

  /// x placed in one factor, identity elsewhere.
  static TensorElement embed(TensorAlgebraPtr alg, int factor, const Multivector<Scalar>& x) {
    if (!(alg->factors().at(factor) == x.sig())) throw std::invalid_argument("factor signature mismatch");
    TensorElement out(alg);
    for (const auto& [m, c] : x.terms()) out.add_term(alg->embed(factor, Blade(m)), c);
    return out;
  }

  /// x_0 ⊗ x_1 ⊗ ... (one multivector per factor).
  static TensorElement pure(TensorAlgebraPtr alg, const std::vector<Multivector<Scalar>>& xs) {
    if (xs.size() != alg->factors().size()) throw std::invalid_argument("pure tensor needs one entry per factor");
    TensorElement out(alg);
    out.add_term(0, Scalar(1));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!(alg->factors()[i] == xs[i].sig())) throw std::invalid_argument("factor signature mismatch");
      TensorElement next(alg);
      for (const auto& [k, c] : out.terms_)
        for (const auto& [m, d] : xs[i].terms()) next.add_term(k | alg->embed(static_cast<int>(i), Blade(m)), c * d);
      out = std::move(next);
    }
    return out;
  }

  const TensorAlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::uint64_t key, const Scalar& c) {
    if (cliff::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (cliff::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
    return a;
  }
  friend TensorElement operator*(const Scalar& s, TensorElement a) {
    TensorElement out(a.alg_);
    for (const auto& [k, c] : a.terms_) out.add_term(k, s * c);
    return out;
  }
  friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    if (x.alg_ != y.alg_ && x.alg_->name() != y.alg_->name()) throw std::invalid_argument("tensor algebra mismatch");
    TensorElement out(x.alg_);
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        const auto prod = x.alg_->product(a, b);
        Scalar c = ca * cb;
        if (prod.sign < 0) c = -c;
        out.add_term(prod.blade.mask, c);
      }
    return out;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

 private:
  TensorAlgebraPtr alg_;
  Terms terms_;
};

template <typename Scalar>
TensorElement<Scalar> as_tensor(const Multivector<Scalar>& x) {
  return TensorElement<Scalar>::embed(TensorAlgebra::make({x.sig()}, false), 0, x);
}

struct GeneratorImage {
  std::string label;  // source generator, e.g. "e3"
  std::vector<std::pair<std::string, std::string>> terms;  // basis label, coefficient
};

/// Certificate that a set of images generates a Clifford algebra: the images
/// satisfy the squares and pairwise anticommutation, and their 2^N monomials
/// have full rank.
struct IsoProof {
  std::string claim;
  std::string kind;
  std::string host;       // algebra containing the images
  Signature target;       // relations realized (up to generator order)
  std::vector<int> expected_squares;
  std::vector<GeneratorImage> images;
  bool relations_ok = false;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  std::string failure;

  bool ok() const { return relations_ok && rank == expected_rank && failure.empty(); }
};

namespace detail {

template <typename Scalar>
std::vector<GeneratorImage> describe_images(const std::vector<TensorElement<Scalar>>& images) {
  std::vector<GeneratorImage> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    GeneratorImage g;
    g.label = "e" + std::to_string(i + 1);
    for (const auto& [k, c] : images[i].terms()) g.terms.emplace_back(images[i].algebra()->key_name(k), to_string(c));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// Fills relations_ok, rank, expected_rank, images and failure of `proof`.
template <typename Scalar>
void certify_generator_map(IsoProof& proof, const std::vector<TensorElement<Scalar>>& images) {
  proof.images = detail::describe_images(images);
  const std::size_t n = images.size();
  if (proof.expected_squares.size() != n) throw std::invalid_argument("one expected square per image required");
  if (n > 20) throw std::invalid_argument("too many generators for a rank certificate");
  proof.expected_rank = std::size_t{1} << n;
  proof.relations_ok = true;
  const auto& alg = images.empty() ? nullptr : images.front().algebra();
  for (std::size_t i = 0; i < n && proof.relations_ok; ++i) {
    TensorElement<Scalar> expect(alg);
    expect.add_term(0, Scalar(proof.expected_squares[i]));
    if (!(images[i] * images[i] == expect)) {
      proof.relations_ok = false;
      proof.failure = "image of e" + std::to_string(i + 1) + " has the wrong square";
    }
    for (std::size_t j = i + 1; j < n && proof.relations_ok; ++j)
      if (!(images[i] * images[j] + images[j] * images[i]).is_zero()) {
        proof.relations_ok = false;
        proof.failure = "images of e" + std::to_string(i + 1) + " and e" + std::to_string(j + 1) + " do not anticommute";
      }
  }
  if (n == 0) {
    proof.rank = 1;
    return;
  }
  // Monomials in subset order; monomial m extends the one without its top bit.
  std::vector<TensorElement<Scalar>> mono;
  mono.reserve(proof.expected_rank);
  TensorElement<Scalar> one(alg);
  one.add_term(0, Scalar(1));
  mono.push_back(one);
  SpanBuilder<Scalar> span;
  span.add(one.terms());
  for (std::size_t m = 1; m < proof.expected_rank; ++m) {
    const int top = std::bit_width(m) - 1;
    mono.push_back(mono[m ^ (std::size_t{1} << top)] * images[top]);
    span.add(mono.back().terms());
  }
  proof.rank = span.rank();
  if (proof.failure.empty() && proof.rank != proof.expected_rank)
    proof.failure = "monomials span " + std::to_string(proof.rank) + " of " + std::to_string(proof.expected_rank);
}

/// Signature with the same number of +1 and -1 entries as `squares`.
Signature signature_of_squares(const std::vector<int>& squares);

/// Chevalley: Cl(a) ⊗̂ Cl(b) ≅ Cl(a.p+b.p, a.q+b.q) via e_i ⊗ 1 and 1 ⊗ e'_j.
IsoProof graded_tensor_check(const Signature& a, const Signature& b);

/// Karoubi: in the ordinary tensor product, e_i ⊗ 1 and ω ⊗ e'_j realize
/// Cl(V⊕V', Q⊕Q') when ω² = +1 and Cl(V⊕V', Q⊕-Q') when ω² = -1.
/// Requires dim V even.
IsoProof karoubi_check(const Signature& a, const Signature& b);

/// m factors of the complexified Cl(2,0) generate the complex Clifford
/// algebra on 2m generators, using ω̃ = iω (ω̃² = +1) as the twist.
IsoProof complex_tensor_check(int m);

enum class EvenIsoKind { isom1, isom2 };

/// isom1: g_i = e_i e_1 realizes Cl(q, p-1) (needs p >= 1).
/// isom2: g_i = e_i e_n realizes Cl(p, q-1) (needs q >= 1).
IsoProof even_iso_check(int p, int q, EvenIsoKind kind);
/// Kind for Cl(0,q) and Cl(p,p) is isom2, isom1 otherwise.
EvenIsoKind preferred_even_iso(int p, int q);
IsoProof even_iso_check(int p, int q);
/// Tries e_i e_n, then e_i e_1, against a requested target signature.
IsoProof even_iso_check(int p, int q, const Signature& target);

enum class QuaternionCase { quaternion, anti_quaternion, pseudo_quaternion };
std::string quaternion_case_name(QuaternionCase c);

struct PhiPsiReport {
  Signature target;
  Signature base;
  int m = 0;
  RealMultivector phi;
  RealMultivector psi;
  RealMultivector phipsi;
  int phi_sq = 0;
  int psi_sq = 0;
  bool commute_with_base = false;
  bool anticommute = false;
  QuaternionCase kind = QuaternionCase::quaternion;
  Signature quaternion_algebra;  // Cl(0,2), Cl(1,1) or Cl(2,0)
  bool roles_swapped = false;    // φ² = -1, ψ² = +1
  std::array<std::size_t, 4> component_ranks{};
  std::size_t span_rank = 0;

  PhiPsiReport() : phi(Signature{}), psi(Signature{}), phipsi(Signature{}) {}
  bool ok() const;
};

/// base must be the subalgebra on e_1..e_{2m} of target, target.n() = 2m+2.
PhiPsiReport phi_psi_factorization(const Signature& target, const Signature& base);
/// Base signature on the first n-2 generators of target.
Signature phi_psi_base(const Signature& target);

/// 2x2 matrix over the complexified base algebra, row-major.
struct BlockMatrix {
  std::array<ComplexMultivector, 4> entries;
  explicit BlockMatrix(const Signature& base)
      : entries{ComplexMultivector(base), ComplexMultivector(base), ComplexMultivector(base), ComplexMultivector(base)} {}
  friend BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y);
  friend bool operator==(const BlockMatrix& x, const BlockMatrix& y) { return x.entries == y.entries; }
};

/// x = A0 + A1 φ + A2 ψ + A3 φψ with A_j in the base subalgebra.
std::array<RealMultivector, 4> phi_psi_components(const PhiPsiReport& f, const RealMultivector& x);

/// [[A0 - iA3, -A1 + iA2], [A1 + iA2, A0 + iA3]]; needs the quaternionic case.
BlockMatrix block_matrix_form(const PhiPsiReport& f, const RealMultivector& x);

struct BlockMatrixReport {
  Signature target;
  int samples = 0;
  int passed = 0;
  bool ok() const { return samples > 0 && passed == samples; }
};

/// Random element with small rational coefficients on every blade.
RealMultivector random_multivector(const Signature& sig, std::mt19937_64& rng, double density = 1.0);

/// Checks matrix(xy) = matrix(x) matrix(y) on `samples` seeded random pairs.
BlockMatrixReport block_matrix_check(int p, int q, int samples, std::mt19937_64& rng);

struct ChainLink {
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct ChainReport {
  std::vector<ChainLink> links;
  std::vector<IsoProof> proofs;
  bool ok() const;
};

/// Cl⁺(2,4) ≅ Cl(4,1) ≅ ℂ₄ ≅ ℂ⊗Cl(1,3), Cl(1,3) ≅ Cl(1,1)⊗Cl(0,2).
ChainReport spin24_chain();

}  // namespace cliff
