#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "solenoid/interval_aut.hpp"
#include "solenoid/points.hpp"

namespace solenoid {

/// Which continuum the copies of a stage are made of.
struct StageMode {
  enum class Kind { LongLine, Tower };

  Kind kind = Kind::LongLine;
  int kappa = 0;  // tower level, tower mode only

  static StageMode long_line() { return {Kind::LongLine, 0}; }
  static StageMode tower(int kappa);

  bool accepts(const CopyPoint& x) const;

  friend bool operator==(const StageMode&, const StageMode&) = default;
};

/**
 * A point of the stage Sigma^(n): n copies of the continuum laid end to end in
 * a circle. Either the joint inf_i (start of copy i) or inf_i + x for an
 * interior point x of copy i. The index is always reduced mod n.
 */
class StagePoint {
 public:
  static StagePoint joint(std::int64_t n, std::int64_t i);
  static StagePoint inner(std::int64_t n, std::int64_t i, CopyPoint x);

  std::int64_t stage() const noexcept { return n_; }
  std::int64_t index() const noexcept { return i_; }
  bool is_joint() const noexcept { return !x_.has_value(); }
  /// Within-copy coordinate; empty for joints.
  const std::optional<CopyPoint>& within() const noexcept { return x_; }

  friend bool operator==(const StagePoint&, const StagePoint&) = default;

 private:
  StagePoint() = default;

  std::int64_t n_ = 1;
  std::int64_t i_ = 0;
  std::optional<CopyPoint> x_;
};

/// Position order on one stage: by copy index, the joint first within a copy.
/// Throws DomainError when the two within-copy coordinates are of different kinds.
std::strong_ordering position_order(const StagePoint& a, const StagePoint& b);

/// Stage sizes k(1) = 1, k(n) = p_1 ... p_(n-1), for n = 1..depth.
std::vector<std::int64_t> stage_sizes(std::span<const std::int64_t> p, std::size_t depth);

/// A finite prefix (x_1, ..., x_d) of a point of the inverse limit, x_n on Sigma^(k(n)).
class Thread {
 public:
  /// Validates sizes, mode and bonding compatibility; throws ThreadMismatch.
  static Thread make(StageMode mode, std::vector<std::int64_t> p, std::vector<StagePoint> points);

  const StageMode& mode() const noexcept { return mode_; }
  const std::vector<std::int64_t>& p() const noexcept { return p_; }
  const std::vector<StagePoint>& points() const noexcept { return points_; }
  std::size_t depth() const noexcept { return points_.size(); }

  friend bool operator==(const Thread&, const Thread&) = default;

 private:
  Thread() = default;

  StageMode mode_;
  std::vector<std::int64_t> p_;
  std::vector<StagePoint> points_;
};

/// One level H_n = Rot(rot) o Trans(trans) o Hat(hat) acting on Sigma^(k(n)).
struct RecipeLevel {
  std::int64_t rot = 0;
  std::int64_t trans = 0;
  IntervalAutToken hat = IntervalAutToken::identity();

  friend bool operator==(const RecipeLevel&, const RecipeLevel&) = default;
};

/// Level-wise description of an autohomeomorphism of the inverse limit.
/// Only the rotations vary from level to level.
class HomeoRecipe {
 public:
  static HomeoRecipe make(StageMode mode, std::vector<std::int64_t> p,
                          std::vector<RecipeLevel> levels);
  static HomeoRecipe identity(StageMode mode, std::vector<std::int64_t> p, std::size_t depth);

  const StageMode& mode() const noexcept { return mode_; }
  const std::vector<std::int64_t>& p() const noexcept { return p_; }
  const std::vector<RecipeLevel>& levels() const noexcept { return levels_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  bool defined_at(std::size_t level, const StagePoint& x) const;
  /// H_level(x), level counted from 0. Throws TokenUndefined off the hat's defined set.
  StagePoint apply_level(std::size_t level, const StagePoint& x) const;

  friend bool operator==(const HomeoRecipe&, const HomeoRecipe&) = default;

 private:
  HomeoRecipe() = default;

  StageMode mode_;
  std::vector<std::int64_t> p_;
  std::vector<RecipeLevel> levels_;
};

/// phi^m_n : Sigma^(mn) -> Sigma^(n).
StagePoint apply_bond(std::int64_t m, std::int64_t n, const StagePoint& x);
/// The m preimages of q under phi^m_n, ascending copy index.
std::vector<StagePoint> fiber(std::int64_t m, std::int64_t n, const StagePoint& q);
StagePoint rotate(std::int64_t k, const StagePoint& x);
/// T_k: shifts the top integer of a tower address (kappa >= 2); joints are fixed.
StagePoint translate(std::int64_t k, const StagePoint& x);

Thread apply_recipe(const HomeoRecipe& r, const Thread& t);

struct CommuteCounterexample {
  std::size_t level = 0;  // n, 1-based: phi^(p_n)_(k(n)) o H_(n+1) vs H_n o phi
  StagePoint point;       // on Sigma^(k(n+1))
  StagePoint via_upper;   // phi(H_(n+1)(point))
  StagePoint via_lower;   // H_n(phi(point))
};

struct CommuteReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<CommuteCounterexample> counterexample;
};

inline constexpr std::int64_t kDefaultAddressBound = 8;

/// Checks phi o H_(n+1) = H_n o phi for n = 1..depth-1 on the verification set:
/// every joint, every tower integer address of depth <= 2 with entries in
/// [-bound, bound], the hat's tracked and boundary points, and a few fixed
/// sample points, each placed in every copy and kept where the recipe is defined.
CommuteReport verify_commutes(const HomeoRecipe& r, std::size_t depth,
                              std::int64_t address_bound = kDefaultAddressBound);

/// The points of Sigma^(n) that verify_commutes checks at level n.
std::vector<StagePoint> verification_set(const HomeoRecipe& r, std::size_t level,
                                         std::int64_t address_bound = kDefaultAddressBound);

struct RecipeStatus {
  enum class Kind { Recipe, ProvenDistinct, Unknown };

  Kind kind;
  std::optional<HomeoRecipe> recipe;
};

/// Builds H_n = R_(l_n) o T_k o Hat with l_n = j_n - i_n mod k(n), or reports
/// that x and y are in provably different orbits, or that this is not known.
RecipeStatus synthesize_recipe(const Thread& x, const Thread& y);

/// All threads extending t by `levels` further levels, bonding exponents taken
/// from p (which must start with t.p()). Order follows ascending copy index.
std::vector<Thread> extend_thread(const Thread& t, std::span<const std::int64_t> p,
                                  std::size_t levels);

}  // namespace solenoid
