#include "cliff/brauer_wall.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "cliff/errors.hpp"

namespace cliff {

namespace {

// R -> C -> H -> H⊕H -> H -> C -> R -> R⊕R -> R around the clock.
constexpr std::array<Ring, 8> kClock{Ring::R, Ring::C, Ring::H, Ring::HH, Ring::H, Ring::C, Ring::R, Ring::RR};

constexpr int kMaterializeLimit = 3;

}  // namespace

Ring clock_ring(int q) { return kClock[((q % 8) + 8) % 8]; }

BWState bw_state(int q) {
  if (q < 0) throw std::invalid_argument("walk index must be non-negative");
  BWState s;
  s.q = q;
  if (q > 0) {
    s.h = (q - 1) % 8 + 1;
    s.r = (q - s.h) / 8;
  }
  s.ring = algebra_type(0, q).ring;
  if (s.ring != clock_ring(q))
    throw VerificationFailure("clock label disagrees with classification at Cl(0," + std::to_string(q) + ")");
  if (q > 0 && s.h + 8 * s.r != q) throw VerificationFailure("q != h + 8r at q=" + std::to_string(q));
  return s;
}

BWState bw_step(const BWState& s) { return bw_state(s.q + 1); }

std::vector<Transition> bw_cycle(int r) {
  if (r < 0) throw std::invalid_argument("cycle index must be non-negative");
  std::vector<Transition> out;
  BWState s = bw_state(8 * r);
  for (int i = 0; i < 8; ++i) {
    BWState next = bw_step(s);
    out.push_back({s, next});
    s = next;
  }
  return out;
}

Chessboard::Chessboard(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("chessboard order must be >= 1");
  if (order > 20) throw std::invalid_argument("chessboard order too large");
  if (order <= kMaterializeLimit) {
    const std::uint64_t n = side();
    cells_.reserve(n * n);
    for (std::uint64_t p = 0; p < n; ++p)
      for (std::uint64_t q = 0; q < n; ++q) cells_.push_back(algebra_type(static_cast<int>(p), static_cast<int>(q)));
  }
}

std::uint64_t Chessboard::side() const { return std::uint64_t{1} << (3 * order_); }

AlgebraClass Chessboard::cell(std::uint64_t p, std::uint64_t q) const {
  const std::uint64_t n = side();
  if (p >= n || q >= n) throw std::out_of_range("chessboard cell out of range");
  if (!cells_.empty()) return cells_[p * n + q];
  return algebra_type(static_cast<int>(p), static_cast<int>(q));
}

Chessboard::SubBoard Chessboard::sub_board(int P, int Q) const {
  if (order_ < 2) throw std::logic_error("an order-1 board has no sub-boards");
  if (P < 0 || P > 7 || Q < 0 || Q > 7) throw std::out_of_range("sub-board index out of range");
  return {P, Q};
}

bool Chessboard::row_rule_holds() const {
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      const int composed = (algebra_type(p, 0).type_mod8 + algebra_type(0, q).type_mod8) % 8;
      if (cell(p, q).type_mod8 != composed) return false;
    }
  return true;
}

double fractal_dimension() { return std::log(63.0) / std::log(8.0); }

Theorem3Report verify_theorem3(int q_max) {
  if (q_max < 24) throw std::invalid_argument("q_max must be at least 24");
  Theorem3Report rep;
  rep.q_max = q_max;
  for (int q = 0; q <= q_max + 8; ++q) rep.k.push_back(idempotent_factor_count(0, q));
  rep.cycles.emplace_back(rep.k.begin(), rep.k.begin() + std::min<std::size_t>(9, rep.k.size()));
  for (int start = 9; start + 7 <= q_max; start += 8)
    rep.cycles.emplace_back(rep.k.begin() + start, rep.k.begin() + start + 8);
  for (int q = 0; q <= q_max; ++q)
    if (rep.k[q + 8] != rep.k[q] + 4) rep.failures.push_back(q);
  return rep;
}

}  // namespace cliff
