#include "solenoid/interval_aut.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

LongPoint as_long(const BasePart& b) { return LongPoint::make(CnfOrdinal{}, b.remainder, b.fraction); }

bool outside_open(const LongPoint& x, const LongPoint& lo, const LongPoint& hi) {
  return x <= lo || x >= hi;
}

}  // namespace

IntervalAutToken IntervalAutToken::identity() { return IntervalAutToken{}; }

IntervalAutToken IntervalAutToken::long_line_interval(LongPoint w, LongPoint z, LongPoint lo,
                                                      LongPoint hi) {
  if (!(lo < w && w < hi && lo < z && z < hi))
    throw Error(ErrorCode::NotSameOrbit, "source and target must lie inside (lo, hi)");
  IntervalAutToken t;
  t.mode_ = w == z ? Mode::Identity : Mode::Mapping;
  t.domain_ = Domain::LongLine;
  t.source_ = std::move(w);
  t.target_ = std::move(z);
  t.lower_ = std::move(lo);
  t.upper_ = std::move(hi);
  return t;
}

IntervalAutToken IntervalAutToken::metric_arc(TowerPoint w, TowerPoint z) {
  if (w.kappa() != 1 || z.kappa() != 1 || !w.is_base() || !z.is_base())
    throw Error(ErrorCode::NotSameOrbit, "metric-arc token needs two base points of Lambda_1");
  // alpha = max(rho) + 1 bounds both points; [0, alpha] is a metric arc.
  const CnfOrdinal& top = std::max(w.base_part()->remainder, z.base_part()->remainder);
  IntervalAutToken t;
  t.mode_ = w == z ? Mode::Identity : Mode::Mapping;
  t.domain_ = Domain::MetricArc;
  t.kappa_ = 1;
  t.lower_ = LongPoint{};
  t.upper_ = LongPoint::make(CnfOrdinal{}, add(top, CnfOrdinal::natural(1)));
  t.source_ = std::move(w);
  t.target_ = std::move(z);
  return t;
}

IntervalAutToken IntervalAutToken::tower_level(int kappa, TowerPoint w, TowerPoint z,
                                               std::int64_t translation) {
  if (kappa < 2 || w.kappa() != kappa - 1 || z.kappa() != kappa - 1 || w.is_joint() ||
      z.is_joint())
    throw Error(ErrorCode::NotSameOrbit, "tower token needs two points of Lambda_(kappa-1)");
  IntervalAutToken t;
  t.mode_ = w == z ? Mode::Identity : Mode::Mapping;
  t.domain_ = Domain::TowerLevel;
  t.kappa_ = kappa;
  t.source_ = std::move(w);
  t.target_ = std::move(z);
  t.translation_ = translation;
  return t;
}

IntervalAutToken IntervalAutToken::with_translation(std::int64_t k) const {
  IntervalAutToken t = *this;
  t.translation_ = k;
  return t;
}

bool IntervalAutToken::defined_at(const CopyPoint& p) const {
  if (mode_ == Mode::Identity) return true;
  switch (domain_) {
    case Domain::Any:
      return true;
    case Domain::LongLine: {
      const auto* x = std::get_if<LongPoint>(&p);
      return x && (*x == std::get<LongPoint>(*source_) || outside_open(*x, *lower_, *upper_));
    }
    case Domain::MetricArc: {
      const auto* x = std::get_if<TowerPoint>(&p);
      if (!x || x->kappa() != 1 || !x->is_base()) return false;
      return *x == std::get<TowerPoint>(*source_) ||
             outside_open(as_long(*x->base_part()), *lower_, *upper_);
    }
    case Domain::TowerLevel: {
      const auto* x = std::get_if<TowerPoint>(&p);
      if (!x || x->kappa() != kappa_ || x->is_joint()) return false;
      if (x->is_int_stop() && x->depth() == 1) return true;
      return x->lower() == std::get<TowerPoint>(*source_);
    }
  }
  return false;
}

CopyPoint IntervalAutToken::apply(const CopyPoint& p) const {
  if (mode_ == Mode::Identity) return p;
  if (!defined_at(p)) throw Error(ErrorCode::TokenUndefined, "automorphism token is not evaluated at this point");
  switch (domain_) {
    case Domain::Any:
      return p;
    case Domain::LongLine:
    case Domain::MetricArc:
      return p == *source_ ? *target_ : p;
    case Domain::TowerLevel: {
      const auto& x = std::get<TowerPoint>(p);
      if (x.is_int_stop() && x.depth() == 1) return p;
      return std::get<TowerPoint>(*target_).prefixed(x.ints().front());
    }
  }
  return p;
}

}  // namespace solenoid
