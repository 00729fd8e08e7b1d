#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliff/classify.hpp"

namespace cliff {

/// Position q of the walk over Cl(0,q), with q = h + 8r and h in 1..8.
/// q = 0 is the origin of the first cycle and carries h = 0.
struct BWState {
  int q = 0;
  int h = 0;
  int r = 0;
  Ring ring = Ring::R;

  friend bool operator==(const BWState&, const BWState&) = default;
};

struct Transition {
  BWState from;
  BWState to;
  int hour() const { return to.h; }
  int cycle() const { return to.r; }
};

/// Ring at each hour of the clock, indexed by q mod 8.
Ring clock_ring(int q);

/// Builds the state for Cl(0,q); throws VerificationFailure when the
/// classification disagrees with the clock.
BWState bw_state(int q);
BWState bw_step(const BWState& s);

/// The eight transitions q = 8r -> 8r+8.
std::vector<Transition> bw_cycle(int r);

/// Fixed-order 8x8 boards nested `order` times; side 8^order.
/// Sub-board (P,Q) of an order-n board covers Cl(8^{n-1}P + p, 8^{n-1}Q + q)
/// and is tagged with the cycle number r = Q.
class Chessboard {
 public:
  explicit Chessboard(int order);

  int order() const { return order_; }
  std::uint64_t side() const;
  // Cells are materialized up to order 3 and computed on demand beyond.
  AlgebraClass cell(std::uint64_t p, std::uint64_t q) const;
  static bool black(std::uint64_t p, std::uint64_t q) { return ((p + q) & 1) == 0; }

  struct SubBoard {
    int row = 0;
    int cycle = 0;
  };
  SubBoard sub_board(int P, int Q) const;

  /// Checks the row rule Cl(p,q) ≅ Cl(p,0) ⊗ Cl(0,q): the type of every
  /// order-1 cell equals type(p,0) + type(0,q) mod 8.
  bool row_rule_holds() const;

 private:
  int order_;
  std::vector<AlgebraClass> cells_;
};

double fractal_dimension();

struct Theorem3Report {
  int q_max = 0;
  std::vector<long long> k;                  // k(0,q) for q = 0..q_max+8
  std::vector<std::vector<long long>> cycles;  // q = 0..8, then 8r+1..8r+8
  std::vector<int> failures;                 // q where k(0,q+8) != k(0,q)+4
  bool ok() const { return failures.empty(); }
};

Theorem3Report verify_theorem3(int q_max);

}  // namespace cliff
