#include "solenoid/tower.hpp"

#include "solenoid/error.hpp"

namespace solenoid {

int point_type(const TowerPoint& p) {
  const int kappa = p.kappa();
  if (p.is_joint()) return kappa + 1;
  if (p.is_base()) return 1;
  return kappa + 1 - static_cast<int>(p.depth());
}

bool same_orbit(const TowerPoint& x, const TowerPoint& y) {
  if (x.kappa() != y.kappa())
    throw Error(ErrorCode::LevelMismatch, "points live in towers of different level (" +
                                              std::to_string(x.kappa()) + " vs " +
                                              std::to_string(y.kappa()) + ")");
  return point_type(x) == point_type(y);
}

IntervalAutToken base_automorphism_token(const TowerPoint& x, const TowerPoint& y) {
  if (!same_orbit(x, y)) throw Error(ErrorCode::NotSameOrbit, "points have different types");
  if (x.is_joint() || y.is_joint())
    throw Error(ErrorCode::NotSameOrbit, "the joint is moved by rotations, not by a token");
  if (x.kappa() == 1) {
    if (x == y) return IntervalAutToken::identity();
    return IntervalAutToken::metric_arc(x, y);
  }
  const std::int64_t k = y.ints().front() - x.ints().front();
  if (x.is_int_stop() && x.depth() == 1) return IntervalAutToken::identity().with_translation(k);
  return IntervalAutToken::tower_level(x.kappa(), x.lower(), y.lower(), k);
}

}  // namespace solenoid
