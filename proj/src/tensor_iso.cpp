#include "cliff/tensor_iso.hpp"

#include <algorithm>

#include "cliff/classify.hpp"
#include "cliff/errors.hpp"

namespace cliff {

std::shared_ptr<const TensorAlgebra> TensorAlgebra::make(std::vector<Signature> factors, bool graded) {
  std::shared_ptr<TensorAlgebra> alg(new TensorAlgebra());
  alg->graded_ = graded;
  for (const Signature& s : factors) {
    alg->offsets_.push_back(alg->n_);
    const std::uint64_t fm = s.full_mask() << alg->n_;
    alg->factor_masks_.push_back(fm);
    alg->negative_mask_ |= s.negative_mask() << alg->n_;
    alg->n_ += s.n();
    if (alg->n_ > kMaxGenerators) throw std::invalid_argument("tensor product exceeds 63 generators");
  }
  alg->factors_ = std::move(factors);
  return alg;
}

BladeProduct TensorAlgebra::product(std::uint64_t a, std::uint64_t b) const {
  int sign = 1;
  int parity = 0;
  int a_above = 0;  // total degree of a in factors after the current one
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint64_t fa = (a & factor_masks_[i]) >> offsets_[i];
    const std::uint64_t fb = (b & factor_masks_[i]) >> offsets_[i];
    sign *= reorder_sign(fa, fb);
    if (graded_) parity += std::popcount(fb) * a_above;
    a_above += std::popcount(fa);
  }
  if (parity & 1) sign = -sign;
  if (std::popcount(a & b & negative_mask_) & 1) sign = -sign;
  return {sign, Blade(a ^ b)};
}

std::uint64_t TensorAlgebra::embed(int factor, Blade b) const {
  const Signature& s = factors_.at(factor);
  if (b.mask & ~s.full_mask()) throw std::out_of_range("blade outside tensor factor");
  return b.mask << offsets_[factor];
}

Blade TensorAlgebra::component(std::uint64_t key, int factor) const {
  return Blade((key & factor_masks_.at(factor)) >> offsets_[factor]);
}

std::string TensorAlgebra::key_name(std::uint64_t key) const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "⊗";
    s += component(key, static_cast<int>(i)).name();
  }
  return s;
}

std::string TensorAlgebra::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += graded_ ? "⊗̂" : "⊗";
    s += factors_[i].name();
  }
  return s;
}

Signature signature_of_squares(const std::vector<int>& squares) {
  const int plus = static_cast<int>(std::count(squares.begin(), squares.end(), 1));
  return Signature(plus, static_cast<int>(squares.size()) - plus);
}

namespace {

std::vector<int> squares_of(const Signature& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.n(); ++i) out.push_back(i <= s.p ? 1 : -1);
  return out;
}

}  // namespace

IsoProof graded_tensor_check(const Signature& a, const Signature& b) {
  if (a.n() + b.n() > 16) throw std::invalid_argument("graded tensor check limited to 16 generators");
  auto alg = TensorAlgebra::make({a, b}, true);
  IsoProof proof;
  proof.kind = "graded";
  proof.host = alg->name();
  proof.target = Signature(a.p + b.p, a.q + b.q);
  proof.claim = alg->name() + " ≅ " + proof.target.name();
  std::vector<TensorElement<Rational>> images;
  for (int i = 1; i <= a.n(); ++i)
    images.push_back(TensorElement<Rational>::embed(alg, 0, RealMultivector::generator(a, i)));
  for (int j = 1; j <= b.n(); ++j)
    images.push_back(TensorElement<Rational>::embed(alg, 1, RealMultivector::generator(b, j)));
  proof.expected_squares = squares_of(a);
  for (int s : squares_of(b)) proof.expected_squares.push_back(s);
  certify_generator_map(proof, images);
  return proof;
}

IsoProof karoubi_check(const Signature& a, const Signature& b) {
  if (a.n() % 2 != 0) throw std::invalid_argument("Karoubi factorization needs an even-dimensional first factor");
  if (a.n() + b.n() > 16) throw std::invalid_argument("Karoubi check limited to 16 generators");
  auto alg = TensorAlgebra::make({a, b}, false);
  const int w2 = omega_square(a);
  const RealMultivector w = volume_element(a);
  IsoProof proof;
  proof.kind = w2 > 0 ? "karoubi+" : "karoubi-";
  proof.host = alg->name();
  // With ω² = -1 the second factor enters with its quadratic form negated.
  proof.target = w2 > 0 ? Signature(a.p + b.p, a.q + b.q) : Signature(a.p + b.q, a.q + b.p);
  proof.claim = alg->name() + " ≅ " + proof.target.name();
  std::vector<TensorElement<Rational>> images;
  for (int i = 1; i <= a.n(); ++i)
    images.push_back(TensorElement<Rational>::embed(alg, 0, RealMultivector::generator(a, i)));
  for (int j = 1; j <= b.n(); ++j)
    images.push_back(TensorElement<Rational>::pure(alg, {w, RealMultivector::generator(b, j)}));
  proof.expected_squares = squares_of(a);
  for (int s : squares_of(b)) proof.expected_squares.push_back(w2 * s);
  if (!(signature_of_squares(proof.expected_squares) == proof.target))
    throw std::logic_error("Karoubi bookkeeping disagrees with target");
  certify_generator_map(proof, images);
  return proof;
}

IsoProof complex_tensor_check(int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("complex tensor check supports 1 <= m <= 4");
  const Signature c2(2, 0);
  auto alg = TensorAlgebra::make(std::vector<Signature>(m, c2), false);
  const ComplexMultivector one(c2, GaussRational(1));
  const ComplexMultivector wt = complexify(volume_element(c2)) * GaussRational::i();  // (iω)² = +1
  IsoProof proof;
  proof.kind = "complex";
  proof.host = "ℂ⊗(" + alg->name() + ")";
  proof.target = Signature(2 * m, 0);
  proof.claim = "ℂ₂^⊗" + std::to_string(m) + " ≅ ℂ_" + std::to_string(2 * m);
  std::vector<TensorElement<GaussRational>> images;
  for (int k = 0; k < m; ++k)
    for (int j = 1; j <= 2; ++j) {
      std::vector<ComplexMultivector> parts(m, one);
      for (int t = 0; t < k; ++t) parts[t] = wt;
      parts[k] = ComplexMultivector::generator(c2, j);
      images.push_back(TensorElement<GaussRational>::pure(alg, parts));
    }
  proof.expected_squares.assign(2 * m, 1);
  certify_generator_map(proof, images);
  return proof;
}

EvenIsoKind preferred_even_iso(int p, int q) {
  return (p == 0 || p == q) ? EvenIsoKind::isom2 : EvenIsoKind::isom1;
}

IsoProof even_iso_check(int p, int q, EvenIsoKind kind) {
  const Signature sig(p, q);
  const int n = sig.n();
  if (n < 1) throw std::invalid_argument("even subalgebra isomorphism needs p+q >= 1");
  if (kind == EvenIsoKind::isom1 && p < 1) throw std::invalid_argument("e_i e_1 construction needs p >= 1");
  if (kind == EvenIsoKind::isom2 && q < 1) throw std::invalid_argument("e_i e_n construction needs q >= 1");
  const int fixed = kind == EvenIsoKind::isom1 ? 1 : n;
  const RealMultivector ef = RealMultivector::generator(sig, fixed);
  IsoProof proof;
  proof.kind = kind == EvenIsoKind::isom1 ? "isom1" : "isom2";
  proof.target = kind == EvenIsoKind::isom1 ? Signature(q, p - 1) : Signature(p, q - 1);
  proof.host = "Cl⁺(" + std::to_string(p) + "," + std::to_string(q) + ")";
  proof.claim = proof.host + " ≅ " + proof.target.name();
  std::vector<TensorElement<Rational>> images;
  for (int i = 1; i <= n; ++i) {
    if (i == fixed) continue;
    const RealMultivector g = RealMultivector::generator(sig, i) * ef;
    if (!is_even(g)) throw std::logic_error("generator image is not even");
    images.push_back(as_tensor(g));
    // (e_i e_f)² = -e_i² e_f²
    const int si = i <= p ? 1 : -1;
    const int sf = fixed <= p ? 1 : -1;
    proof.expected_squares.push_back(-si * sf);
  }
  if (!(signature_of_squares(proof.expected_squares) == proof.target))
    throw std::logic_error("even isomorphism bookkeeping disagrees with target");
  if (images.empty()) {
    proof.relations_ok = true;
    proof.rank = proof.expected_rank = 1;
    return proof;
  }
  certify_generator_map(proof, images);
  return proof;
}

IsoProof even_iso_check(int p, int q) { return even_iso_check(p, q, preferred_even_iso(p, q)); }

IsoProof even_iso_check(int p, int q, const Signature& target) {
  for (EvenIsoKind kind : {EvenIsoKind::isom2, EvenIsoKind::isom1}) {
    if (kind == EvenIsoKind::isom2 && q < 1) continue;
    if (kind == EvenIsoKind::isom1 && p < 1) continue;
    IsoProof proof = even_iso_check(p, q, kind);
    if (proof.target == target && proof.ok()) return proof;
  }
  IsoProof failed;
  failed.kind = "none";
  failed.host = "Cl⁺(" + std::to_string(p) + "," + std::to_string(q) + ")";
  failed.target = target;
  failed.claim = failed.host + " ≅ " + target.name();
  failed.failure = "neither e_i e_n nor e_i e_1 realizes " + target.name();
  return failed;
}

std::string quaternion_case_name(QuaternionCase c) {
  switch (c) {
    case QuaternionCase::quaternion: return "quaternion";
    case QuaternionCase::anti_quaternion: return "anti-quaternion";
    case QuaternionCase::pseudo_quaternion: return "pseudo-quaternion";
  }
  return "?";
}

Signature phi_psi_base(const Signature& target) {
  const int n = target.n();
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("φ/ψ factorization needs an even number of generators >= 2");
  const int base_n = n - 2;
  const int bp = std::min(target.p, base_n);
  return Signature(bp, base_n - bp);
}

bool PhiPsiReport::ok() const {
  const std::size_t part = std::size_t{1} << (2 * m);
  return commute_with_base && anticommute && span_rank == (part << 2) &&
         std::all_of(component_ranks.begin(), component_ranks.end(), [part](std::size_t r) { return r == part; });
}

PhiPsiReport phi_psi_factorization(const Signature& target, const Signature& base) {
  if (!(phi_psi_base(target) == base))
    throw std::invalid_argument(base.name() + " is not the subalgebra on the first generators of " + target.name());
  PhiPsiReport rep;
  rep.target = target;
  rep.base = base;
  rep.m = base.n() / 2;
  const int n = target.n();
  std::vector<int> lead;
  for (int i = 1; i <= 2 * rep.m; ++i) lead.push_back(i);
  auto with = [&](int extra) {
    auto idx = lead;
    idx.push_back(extra);
    return RealMultivector(target, Blade::from_indices(idx));
  };
  rep.phi = with(n - 1);
  rep.psi = with(n);
  rep.phipsi = rep.phi * rep.psi;
  rep.phi_sq = sgn((rep.phi * rep.phi).scalar_part());
  rep.psi_sq = sgn((rep.psi * rep.psi).scalar_part());
  if ((rep.phi * rep.phi).size() != 1 || (rep.psi * rep.psi).size() != 1)
    throw VerificationFailure("φ or ψ does not square to a scalar");
  rep.commute_with_base = true;
  for (int i = 1; i <= 2 * rep.m; ++i) {
    const auto e = RealMultivector::generator(target, i);
    rep.commute_with_base = rep.commute_with_base && commutes(rep.phi, e) && commutes(rep.psi, e);
  }
  rep.anticommute = anticommutes(rep.phi, rep.psi);
  if (rep.phi_sq < 0 && rep.psi_sq < 0) {
    rep.kind = QuaternionCase::quaternion;
    rep.quaternion_algebra = Signature(0, 2);
  } else if (rep.phi_sq > 0 && rep.psi_sq > 0) {
    rep.kind = QuaternionCase::pseudo_quaternion;
    rep.quaternion_algebra = Signature(2, 0);
  } else {
    rep.kind = QuaternionCase::anti_quaternion;
    rep.quaternion_algebra = Signature(1, 1);
    rep.roles_swapped = rep.phi_sq < 0;
  }

  // Rank of each Cl_base·u for u in {1, φ, ψ, φψ}, then of the whole sum.
  const std::array<RealMultivector, 4> units{RealMultivector(target, Rational(1)), rep.phi, rep.psi, rep.phipsi};
  const std::uint64_t base_full = base.full_mask();
  SpanBuilder<Rational> total;
  for (std::size_t u = 0; u < 4; ++u) {
    SpanBuilder<Rational> part;
    for (std::uint64_t m = 0; m <= base_full; ++m) {
      const RealMultivector v = RealMultivector(target, Blade(m)) * units[u];
      part.add(v.terms());
      total.add(v.terms());
    }
    rep.component_ranks[u] = part.rank();
  }
  rep.span_rank = total.rank();
  return rep;
}

std::array<RealMultivector, 4> phi_psi_components(const PhiPsiReport& f, const RealMultivector& x) {
  if (!(x.sig() == f.target)) throw std::invalid_argument("element is not in " + f.target.name());
  const int shift = 2 * f.m;
  const std::array<RealMultivector, 4> units{RealMultivector(f.target, Rational(1)), f.phi, f.psi, f.phipsi};
  std::array<RealMultivector, 4> inv{units[0], units[1], units[2], units[3]};
  for (std::size_t j = 1; j < 4; ++j) {
    const Rational sq = (units[j] * units[j]).scalar_part();
    inv[j] = units[j] * inverse(sq);
  }
  std::array<RealMultivector, 4> out{RealMultivector(f.base), RealMultivector(f.base), RealMultivector(f.base),
                                     RealMultivector(f.base)};
  for (const auto& [mask, c] : x.terms()) {
    const std::size_t top = (mask >> shift) & 3;
    // Pattern 01 is φ, 10 is ψ, 11 is φψ.
    const RealMultivector part = RealMultivector(f.target, Blade(mask), c) * inv[top];
    for (const auto& [pm, pc] : part.terms()) {
      if (pm >> shift) throw std::logic_error("component escapes the base algebra");
      out[top].add_term(Blade(pm), pc);
    }
  }
  return out;
}

BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y) {
  const Signature base = x.entries[0].sig();
  BlockMatrix out(base);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      ComplexMultivector acc(base);
      for (int j = 0; j < 2; ++j) acc += x.entries[2 * i + j] * y.entries[2 * j + k];
      out.entries[2 * i + k] = acc;
    }
  return out;
}

BlockMatrix block_matrix_form(const PhiPsiReport& f, const RealMultivector& x) {
  if (f.kind != QuaternionCase::quaternion) throw std::invalid_argument("block form needs φ² = ψ² = -1");
  const auto a = phi_psi_components(f, x);
  std::array<ComplexMultivector, 4> c{complexify(a[0]), complexify(a[1]), complexify(a[2]), complexify(a[3])};
  const GaussRational i = GaussRational::i();
  BlockMatrix m(f.base);
  m.entries[0] = c[0] - c[3] * i;
  m.entries[1] = c[2] * i - c[1];
  m.entries[2] = c[1] + c[2] * i;
  m.entries[3] = c[0] + c[3] * i;
  return m;
}

RealMultivector random_multivector(const Signature& sig, std::mt19937_64& rng, double density) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(density);
  RealMultivector x(sig);
  for (std::uint64_t m = 0; m <= sig.full_mask(); ++m) {
    if (!keep(rng)) continue;
    const int a = num(rng);  // draws sequenced for a reproducible stream
    Rational c(a, den(rng));
    c.canonicalize();
    x.add_term(Blade(m), c);
  }
  return x;
}

BlockMatrixReport block_matrix_check(int p, int q, int samples, std::mt19937_64& rng) {
  const Signature target(p, q);
  const PhiPsiReport f = phi_psi_factorization(target, phi_psi_base(target));
  BlockMatrixReport rep;
  rep.target = target;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const RealMultivector x = random_multivector(target, rng);
    const RealMultivector y = random_multivector(target, rng);
    if (block_matrix_form(f, x * y) == block_matrix_form(f, x) * block_matrix_form(f, y)) ++rep.passed;
  }
  return rep;
}

bool ChainReport::ok() const {
  return !links.empty() && std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.ok; });
}

ChainReport spin24_chain() {
  ChainReport rep;

  IsoProof even = even_iso_check(2, 4, Signature(4, 1));
  rep.links.push_back({"Cl⁺(2,4) ≅ Cl(4,1)", even.ok(), even.kind});
  rep.proofs.push_back(even);

  // Cl(4,1) = Cl⁺(4,1) ⊕ ω Cl⁺(4,1) with ω central and ω² = -1, and Cl⁺(4,1) ≅ Cl(1,3).
  const Signature s41(4, 1);
  const AlgebraClass c41 = algebra_type(4, 1);
  const RealMultivector w = volume_element(s41);
  bool central = true;
  for (int i = 1; i <= 5; ++i) central = central && commutes(w, RealMultivector::generator(s41, i));
  SpanBuilder<Rational> span;
  for (Blade b : even_subalgebra_basis(s41)) {
    span.add(RealMultivector(s41, b).terms());
    span.add((w * RealMultivector(s41, b)).terms());
  }
  IsoProof inner = even_iso_check(4, 1, Signature(1, 3));
  const bool complex_ok = c41.ring == Ring::C && central && omega_square(s41) == -1 && span.rank() == 32 && inner.ok();
  rep.links.push_back({"Cl(4,1) ≅ ℂ⊗Cl(1,3)", complex_ok,
                       "type " + std::to_string(c41.type_mod8) + ", ring " + ring_name(c41.ring) + ", ω central, ω²=-1"});
  rep.proofs.push_back(inner);

  // ℂ⊗Cl(1,3) ≅ ℂ₄: e1, i e2, i e3, i e4 all square to +1.
  {
    const Signature s13(1, 3);
    IsoProof proof;
    proof.kind = "complexified";
    proof.host = "ℂ⊗Cl(1,3)";
    proof.target = Signature(4, 0);
    proof.claim = "ℂ⊗Cl(1,3) ≅ ℂ₄";
    std::vector<TensorElement<GaussRational>> images;
    for (int i = 1; i <= 4; ++i) {
      ComplexMultivector g = ComplexMultivector::generator(s13, i);
      if (i > 1) g = g * GaussRational::i();
      images.push_back(as_tensor(g));
    }
    proof.expected_squares.assign(4, 1);
    certify_generator_map(proof, images);
    rep.links.push_back({proof.claim, proof.ok(), "rank " + std::to_string(proof.rank)});
    rep.proofs.push_back(proof);
  }

  IsoProof c4 = complex_tensor_check(2);
  rep.links.push_back({"ℂ₄ ≅ ℂ₂⊗ℂ₂", c4.ok(), "rank " + std::to_string(c4.rank)});
  rep.proofs.push_back(c4);

  IsoProof k = karoubi_check(Signature(1, 1), Signature(0, 2));
  rep.links.push_back({"Cl(1,3) ≅ Cl(1,1)⊗Cl(0,2)", k.ok() && k.target == Signature(1, 3), k.kind});
  rep.proofs.push_back(k);
  return rep;
}

}  // namespace cliff
