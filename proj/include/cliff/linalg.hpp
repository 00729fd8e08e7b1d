#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

template <typename Scalar>
using SparseVector = std::map<std::uint64_t, Scalar>;

/// Incremental row echelon form over an exact field. Each stored row is
/// normalized so that its smallest key (the pivot) has coefficient 1.
template <typename Scalar>
class SpanBuilder {
 public:
  /// Adds v to the span; returns true when v was linearly independent.
  bool add(const SparseVector<Scalar>& v) {
    SparseVector<Scalar> r = reduce(v);
    if (r.empty()) return false;
    const std::uint64_t pivot = r.begin()->first;
    const Scalar inv = inverse(r.begin()->second);
    for (auto& [k, c] : r) c *= inv;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const SparseVector<Scalar>& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }

  /// Echelon rows in pivot order.
  std::vector<SparseVector<Scalar>> basis() const {
    std::vector<SparseVector<Scalar>> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  SparseVector<Scalar> reduce(SparseVector<Scalar> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Scalar factor = it->second;
      const std::uint64_t key = it->first;
      // Row entries all have keys >= pivot, so iterators below `key` stay valid.
      for (const auto& [k, c] : row->second) {
        auto [pos, inserted] = v.try_emplace(k, Scalar(0));
        pos->second -= factor * c;
        if (is_zero(pos->second)) v.erase(pos);
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  std::map<std::uint64_t, SparseVector<Scalar>> rows_;
};

template <typename Scalar, typename Range>
std::size_t exact_rank(const Range& vectors) {
  SpanBuilder<Scalar> span;
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

}  // namespace cliff
