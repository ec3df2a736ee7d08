#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "solenoid/points.hpp"

namespace solenoid {

/// The within-copy coordinate of a stage point: a long-line point or a tower address.
using CopyPoint = std::variant<LongPoint, TowerPoint>;

/**
 * Stand-in for an endpoint-fixing autohomeomorphism of one copy of the
 * defining continuum that carries a source point w to a target point z.
 *
 * Only the evaluations the orbit arguments consume are defined: w goes to z,
 * and the points the map must fix stay put. Asking for any other value
 * throws TokenUndefined.
 *
 * Domains:
 *   LongLine    supported on an open interval (lo, hi) of the long line;
 *               everything outside it is fixed.
 *   MetricArc   kappa = 1 tower copies; supported on (0, alpha) with alpha a
 *               countable ordinal above both points.
 *   TowerLevel  kappa >= 2 tower copies; acts on the component below the top
 *               integer (a point of Lambda_(kappa-1)) and fixes its minimum,
 *               i.e. every depth-1 integer point.
 */
class IntervalAutToken {
 public:
  enum class Mode { Identity, Mapping };
  enum class Domain { Any, LongLine, MetricArc, TowerLevel };

  static IntervalAutToken identity();
  static IntervalAutToken long_line_interval(LongPoint w, LongPoint z, LongPoint lo, LongPoint hi);
  /// kappa = 1: w and z are base points of Lambda_1.
  static IntervalAutToken metric_arc(TowerPoint w, TowerPoint z);
  /// kappa >= 2: w and z are lower components (points of Lambda_(kappa-1)).
  static IntervalAutToken tower_level(int kappa, TowerPoint w, TowerPoint z,
                                      std::int64_t translation);

  Mode mode() const noexcept { return mode_; }
  Domain domain() const noexcept { return domain_; }
  bool is_identity() const noexcept { return mode_ == Mode::Identity; }
  /// Tower level of the points this token is applied to (0 outside tower mode).
  int kappa() const noexcept { return kappa_; }
  const std::optional<CopyPoint>& source() const noexcept { return source_; }
  const std::optional<CopyPoint>& target() const noexcept { return target_; }
  /// Fixed-boundary descriptors: the support is the open interval (lower, upper).
  const std::optional<LongPoint>& lower() const noexcept { return lower_; }
  const std::optional<LongPoint>& upper() const noexcept { return upper_; }
  /// Translation T_k to compose with the automorphism (tower mode only).
  std::int64_t translation() const noexcept { return translation_; }

  IntervalAutToken with_translation(std::int64_t k) const;

  bool defined_at(const CopyPoint& p) const;
  /// Throws TokenUndefined outside the defined set.
  CopyPoint apply(const CopyPoint& p) const;

  friend bool operator==(const IntervalAutToken&, const IntervalAutToken&) = default;

 private:
  IntervalAutToken() = default;

  Mode mode_ = Mode::Identity;
  Domain domain_ = Domain::Any;
  int kappa_ = 0;
  std::optional<CopyPoint> source_;
  std::optional<CopyPoint> target_;
  std::optional<LongPoint> lower_;
  std::optional<LongPoint> upper_;
  std::int64_t translation_ = 0;
};

}  // namespace solenoid
