#include "cliff/spin_reps.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliff/brauer_wall.hpp"
#include "cliff/classify.hpp"
#include "cliff/errors.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

HalfInt HalfInt::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return from_twice(2 * v);
    }
    const std::string den = text.substr(slash + 1);
    if (den != "2") throw std::invalid_argument(text);
    const std::string num = text.substr(0, slash);
    const long long v = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    return from_twice(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a half-integer: " + text);
  }
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt abs(HalfInt x) { return x.twice() < 0 ? -x : x; }

std::string field_name(RepField f) { return f == RepField::real ? "real" : "quaternionic"; }
std::string field_letter(RepField f) { return f == RepField::real ? "r" : "q"; }

std::uint64_t RepLabel::spinspace_dim() const {
  if (spinspace_log2() >= 64) throw std::overflow_error("spinspace dimension overflows 64 bits");
  return std::uint64_t{1} << spinspace_log2();
}

std::vector<HalfInt> RepLabel::spin_values() const {
  std::vector<HalfInt> out;
  const HalfInt s = spin();
  for (HalfInt v = -s; v <= s; v = v + HalfInt::from_twice(2)) out.push_back(v);
  return out;
}

std::string RepLabel::name() const {
  return std::string(quotient ? "^ε" : "") + "τ^" + field_letter(field) + "_{" + l.str() + "," + l_dot.str() + "}";
}

RepField rep_field(HalfInt l, HalfInt l_dot) {
  if (l.twice() < 0 || l_dot.twice() < 0) throw std::invalid_argument("l and l̇ must be non-negative");
  const long long p = 2 * l.twice();
  const long long q = 2 * l_dot.twice();
  if (p > 1'000'000 || q > 1'000'000) throw std::invalid_argument("representation index too large");
  const Ring ring = algebra_type(static_cast<int>(p), static_cast<int>(q)).ring;
  switch (ring) {
    case Ring::R:
    case Ring::RR: return RepField::real;
    case Ring::H:
    case Ring::HH: return RepField::quaternionic;
    case Ring::C: break;
  }
  throw VerificationFailure("Cl(4l,4l̇) has an odd type");
}

RepLabel rep_label(long long k, long long r) {
  if (k < 0 || r < 0) throw std::invalid_argument("k and r must be non-negative");
  RepLabel label;
  label.l = HalfInt::from_twice(k);
  label.l_dot = HalfInt::from_twice(r);
  label.field = rep_field(label.l, label.l_dot);
  return label;
}

std::vector<WalkEntry> bw_rep_walk(int cycles) {
  if (cycles < 1) throw std::invalid_argument("walk needs at least one cycle");
  std::vector<WalkEntry> out;
  for (int q = 0; q <= 8 * cycles; ++q) {
    const BWState s = bw_state(q);
    WalkEntry e;
    e.q = q;
    e.hour = s.h;
    e.cycle = s.r;
    if (q % 2 == 0) {
      e.label = rep_label(0, q / 2);
      const RepField from_clock = (s.ring == Ring::R || s.ring == Ring::RR) ? RepField::real : RepField::quaternionic;
      if (from_clock != e.label.field)
        throw VerificationFailure("walk field disagrees with Cl(0," + std::to_string(q) + ")");
    } else {
      e.label = out.back().label;
      e.label.quotient = true;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<RepLabel> bw_rep_cycle(int c) {
  if (c < 1) throw std::invalid_argument("cycles are numbered from 1");
  const auto walk = bw_rep_walk(c);
  std::vector<RepLabel> out;
  for (std::size_t q = 8 * static_cast<std::size_t>(c - 1); q < walk.size(); ++q) out.push_back(walk[q].label);
  return out;
}

bool QuotientReport::ok() const {
  const std::size_t half = std::size_t{1} << (q - 1);
  return idempotent && orthogonal && complete && central && kernel_is_ideal && kernel_matches_lambda && image_faithful &&
         kernel_dim == half && quotient_dim == half;
}

QuotientReport quotient_structure(int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("quotient structure needs odd q");
  if (q > 11) throw std::invalid_argument("quotient structure limited to q <= 11");
  const Signature sig(0, q);
  QuotientReport rep;
  rep.q = q;
  rep.omega_sq = omega_square(sig);
  rep.complexified = rep.omega_sq < 0;
  ComplexMultivector j = complexify(volume_element(sig));
  if (rep.complexified) j = j * GaussRational::i();
  const ComplexMultivector one(sig, GaussRational(1));
  const GaussRational half(Rational(1, 2));
  rep.lambda_plus = (one + j) * half;
  rep.lambda_minus = (one - j) * half;
  const auto& lp = rep.lambda_plus;
  const auto& lm = rep.lambda_minus;
  rep.idempotent = lp * lp == lp && lm * lm == lm;
  rep.orthogonal = (lp * lm).is_zero() && (lm * lp).is_zero();
  rep.complete = lp + lm == one;
  rep.central = true;
  for (int i = 1; i <= q; ++i) {
    const auto e = ComplexMultivector::generator(sig, i);
    rep.central = rep.central && commutes(lp, e) && commutes(lm, e);
  }

  // Cl(0,q-1) sits on the first q-1 generators.
  const std::uint64_t base_full = (std::uint64_t{1} << (q - 1)) - 1;
  SpanBuilder<GaussRational> kernel;
  std::vector<ComplexMultivector> kernel_basis;
  SpanBuilder<GaussRational> image;
  for (std::uint64_t m = 0; m <= base_full; ++m) {
    const ComplexMultivector b(sig, Blade(m), GaussRational(1));
    const ComplexMultivector v = b - j * b;
    if (kernel.add(v.terms())) kernel_basis.push_back(v);
    image.add((lp * b).terms());
  }
  rep.kernel_dim = kernel.rank();
  rep.image_faithful = image.rank() == base_full + 1;

  SpanBuilder<GaussRational> lambda_span;
  SpanBuilder<GaussRational> plus_span;
  for (Blade b : all_blades(sig)) {
    const ComplexMultivector x(sig, b, GaussRational(1));
    lambda_span.add((lm * x).terms());
    plus_span.add((lp * x).terms());
  }
  rep.kernel_matches_lambda = lambda_span.rank() == kernel.rank();
  for (const auto& v : kernel_basis) rep.kernel_matches_lambda = rep.kernel_matches_lambda && lambda_span.contains(v.terms());
  rep.kernel_is_ideal = true;
  for (const auto& v : kernel_basis)
    for (int i = 1; i <= q && rep.kernel_is_ideal; ++i) {
      const auto e = ComplexMultivector::generator(sig, i);
      rep.kernel_is_ideal = kernel.contains((e * v).terms()) && kernel.contains((v * e).terms());
    }
  rep.quotient_dim = (std::size_t{1} << q) - rep.kernel_dim;
  if (plus_span.rank() != rep.quotient_dim) rep.image_faithful = false;
  return rep;
}

SpinChain spin_chain(HalfInt l, HalfInt l_dot) {
  if (l.twice() < 0 || l_dot.twice() < 0) throw std::invalid_argument("l and l̇ must be non-negative");
  if (l > l_dot) throw std::invalid_argument("spin chains are listed with l <= l̇");
  SpinChain chain;
  chain.l = l;
  chain.l_dot = l_dot;
  HalfInt a = l;
  HalfInt b = l_dot;
  while (true) {
    chain.members.push_back(rep_label(a.twice(), b.twice()));
    chain.spins.push_back(a - b);
    if (a == l_dot) break;
    a = a + kHalf;
    b = b - kHalf;
  }
  return chain;
}

std::uint64_t TensorAlgebraDescriptor::spinspace_dim() const {
  if (k + r >= 64) throw std::overflow_error("spinspace dimension overflows 64 bits");
  return std::uint64_t{1} << (k + r);
}

std::string TensorAlgebraDescriptor::name() const {
  std::string s;
  for (long long i = 0; i < k + r; ++i) {
    if (i) s += "⊗";
    s += i < k ? "ℂ₂" : "ℂ₂*";
  }
  return s.empty() ? "ℂ" : s;
}

std::vector<TensorAlgebraDescriptor> chain_algebra_sequence(const SpinChain& chain) {
  std::vector<TensorAlgebraDescriptor> out;
  for (const auto& m : chain.members) out.push_back({m.k(), m.r()});
  return out;
}

bool RepresentationBlock::contains(const RepLabel& label) const {
  return std::find(nodes.begin(), nodes.end(), label) != nodes.end();
}

RepresentationBlock representation_block(int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("representation blocks of order 1 and 2 are supported");
  RepresentationBlock block;
  block.order = order;
  auto add = [&block](const RepLabel& label) {
    if (!block.contains(label)) block.nodes.push_back(label);
  };
  const int blocks = order == 1 ? 1 : 8;
  for (int b = 0; b < blocks; ++b)
    for (long long k = 4 * b; k <= 4 * b + 4; ++k)
      for (long long r = 4 * b; r <= 4 * b + 4; ++r) add(rep_label(k, r));
  if (order == 2)
    for (const auto& e : bw_rep_walk(8)) add(e.label);
  std::sort(block.nodes.begin(), block.nodes.end(), [](const RepLabel& x, const RepLabel& y) {
    if (x.l_dot != y.l_dot) return x.l_dot < y.l_dot;
    if (x.l != y.l) return x.l < y.l;
    return x.quotient < y.quotient;
  });
  return block;
}

}  // namespace cliff
