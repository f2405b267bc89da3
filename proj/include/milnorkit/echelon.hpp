#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "milnorkit/univariate.hpp"

namespace milnorkit {

/// Incremental semi-echelon basis of a space of sparse vectors over an exact
/// field. Each stored row has pivot coefficient 1 and no entries before the
/// pivot. With tracking enabled, every row also remembers how it was built
/// from the inserted vectors, which turns `reduce` into a linear solver.
template <class F>
class Echelon {
 public:
  using Vec = std::map<std::size_t, F>;

  explicit Echelon(bool track = false) : track_(track) {}

  /// Adds v (tagged `id` for combinations). Returns false when v already
  /// lies in the span.
  bool insert(Vec v, std::size_t id = 0) {
    Vec comb;
    if (track_) comb.emplace(id, F(1L));
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) break;
      F c = it->second;
      axpy(v, row->second.entries, c);
      if (track_) axpy(comb, row->second.comb, c);
      it = v.begin();
    }
    if (v.empty()) return false;
    std::size_t pivot = v.begin()->first;
    F inv = F(1L) / v.begin()->second;
    Row r;
    r.entries.reserve(v.size());
    for (auto& [k, x] : v) r.entries.emplace_back(k, x * inv);
    if (track_)
      for (auto& [k, x] : comb) r.comb.emplace(k, x * inv);
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  struct Reduced {
    Vec residual;
    /// v = sum(combination[id] * inserted[id]) + residual.
    Vec combination;
  };

  Reduced reduce(Vec v) const {
    Reduced out;
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        out.residual.emplace(it->first, it->second);
        ++it;
        continue;
      }
      std::size_t at = it->first;
      F c = it->second;
      axpy(v, row->second.entries, c);
      if (track_) axpy(out.combination, row->second.comb, -c);
      it = v.upper_bound(at);
    }
    return out;
  }

  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::size_t index) const { return rows_.count(index) > 0; }

 private:
  struct Row {
    std::vector<std::pair<std::size_t, F>> entries;
    Vec comb;
  };

  // v -= c * row
  template <class Entries>
  static void axpy(Vec& v, const Entries& row, const F& c) {
    for (const auto& [k, x] : row) {
      auto [pos, inserted] = v.try_emplace(k, F(0L));
      pos->second = pos->second - c * x;
      if (field_is_zero(pos->second)) v.erase(pos);
    }
  }

  bool track_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace milnorkit
