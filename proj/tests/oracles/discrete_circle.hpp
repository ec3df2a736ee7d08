#pragma once

// Arcs of a stage drawn on a finite circle. The within-copy coordinates that
// occur are ranked; copy i, rank r sits at slot i * W + 2 * (r + 1), with odd
// slots standing for the open stretches between consecutive known points and
// slot i * W for the joint. Closed arcs become cyclic runs of slots.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "solenoid/arcs.hpp"

namespace oracle {

class DiscreteCircle {
 public:
  DiscreteCircle(std::int64_t stage, std::vector<solenoid::CopyPoint> coords)
      : stage_(stage), coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end(), less);
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
    width_ = 2 * static_cast<std::int64_t>(coords_.size()) + 2;
  }

  std::int64_t size() const { return stage_ * width_; }

  std::int64_t slot(const solenoid::StagePoint& p) const {
    std::int64_t base = p.index() * width_;
    if (p.is_joint()) return base;
    const auto it = std::lower_bound(coords_.begin(), coords_.end(), *p.within(), less);
    return base + 2 * (it - coords_.begin() + 1);
  }

  std::vector<bool> cover(const solenoid::Arc& a) const {
    std::vector<bool> out(static_cast<std::size_t>(size()), false);
    for (std::int64_t s = slot(a.start);; s = (s + 1) % size()) {
      out[static_cast<std::size_t>(s)] = true;
      if (s == slot(a.end)) break;
    }
    return out;
  }

  // Number of maximal cyclic runs of true slots (a full circle counts as one).
  static std::size_t runs(const std::vector<bool>& v) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] && !v[(i + v.size() - 1) % v.size()]) ++n;
    if (n == 0 && !v.empty() && v[0]) n = 1;
    return n;
  }

 private:
  static bool less(const solenoid::CopyPoint& a, const solenoid::CopyPoint& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* x = std::get_if<solenoid::LongPoint>(&a)) return *x < std::get<solenoid::LongPoint>(b);
    return std::get<solenoid::TowerPoint>(a) < std::get<solenoid::TowerPoint>(b);
  }

  std::int64_t stage_;
  std::vector<solenoid::CopyPoint> coords_;
  std::int64_t width_ = 2;
};

inline bool any_common(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return true;
  return false;
}

inline bool all_covered(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i] && !b[i]) return false;
  return true;
}

}  // namespace oracle
