#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "solenoid/ordinal.hpp"

namespace solenoid {

using Rational = boost::multiprecision::cpp_rational;

std::strong_ordering compare_rational(const Rational& a, const Rational& b);

/**
 * A point of the closed long line [0, w1 * w^w], written w1*blocks + remainder + fraction.
 *
 * blocks is below w^w, remainder is read as a countable ordinal, and the
 * fraction lies in [0, 1). The right endpoint is a separate marker with no
 * other fields.
 */
class LongPoint {
 public:
  LongPoint() = default;  // the point 0

  static LongPoint make(CnfOrdinal blocks, CnfOrdinal remainder, Rational fraction = 0);
  /// w1 * blocks.
  static LongPoint omega1_multiple(CnfOrdinal blocks);
  static LongPoint end_max();

  bool is_end_max() const noexcept { return end_max_; }
  bool is_zero() const noexcept;
  const CnfOrdinal& blocks() const noexcept { return blocks_; }
  const CnfOrdinal& remainder() const noexcept { return remainder_; }
  const Rational& fraction() const noexcept { return fraction_; }

  friend bool operator==(const LongPoint&, const LongPoint&);
  friend std::strong_ordering operator<=>(const LongPoint&, const LongPoint&);

 private:
  bool end_max_ = false;
  CnfOrdinal blocks_;
  CnfOrdinal remainder_;
  Rational fraction_{0};
};

/// rho + t with (rho, t) != (0, 0): a point of the open standard long line (0, w1).
struct BasePart {
  CnfOrdinal remainder;
  Rational fraction{0};

  friend bool operator==(const BasePart&, const BasePart&) = default;
};

std::strong_ordering operator<=>(const BasePart& a, const BasePart& b);

/**
 * A point of the tower space Lambda_kappa (kappa >= 1), or of the circle
 * obtained by collapsing its endpoints.
 *
 * Non-joint points are integer addresses [z1, ..., zj]. An address either
 * stops (the point (z1, ..., zj, min)) or ends in a base part, in which
 * case j = kappa - 1. For kappa = 1 the only non-joint points are bare base
 * parts.
 */
class TowerPoint {
 public:
  static TowerPoint joint(int kappa);
  static TowerPoint int_stop(int kappa, std::vector<std::int64_t> ints);
  static TowerPoint base(int kappa, std::vector<std::int64_t> ints, BasePart part);

  int kappa() const noexcept { return kappa_; }
  bool is_joint() const noexcept { return joint_; }
  bool is_int_stop() const noexcept { return !joint_ && !base_; }
  bool is_base() const noexcept { return base_.has_value(); }
  const std::vector<std::int64_t>& ints() const noexcept { return ints_; }
  const std::optional<BasePart>& base_part() const noexcept { return base_; }
  /// Number of integer coordinates.
  std::size_t depth() const noexcept { return ints_.size(); }

  /// The within-copy component after the top integer, a point of Lambda_(kappa-1).
  /// Requires kappa >= 2 and a non-joint point that is not a depth-1 stop.
  TowerPoint lower() const;
  /// Re-embeds a point of Lambda_kappa one level up as (top, *this) in Lambda_(kappa+1).
  TowerPoint prefixed(std::int64_t top) const;
  /// Same point with the top integer shifted by k.
  TowerPoint shifted(std::int64_t k) const;

  friend bool operator==(const TowerPoint&, const TowerPoint&) = default;
  /// Lexicographic order inside one copy of Lambda_kappa; the joint sorts first.
  friend std::strong_ordering operator<=>(const TowerPoint&, const TowerPoint&);

 private:
  TowerPoint() = default;

  int kappa_ = 1;
  bool joint_ = false;
  std::vector<std::int64_t> ints_;
  std::optional<BasePart> base_;
};

}  // namespace solenoid
