#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "solenoid/stage.hpp"

namespace solenoid {

/// Closed arc of Sigma^(n) running forward (increasing copy index) from start
/// to end. Arcs are proper: start != end.
struct Arc {
  StagePoint start;
  StagePoint end;

  static Arc make(StagePoint start, StagePoint end);
  std::int64_t stage() const noexcept { return start.stage(); }

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Open arc of Sigma^(n) strictly between `from` and `to`, running forward.
struct OpenGap {
  StagePoint from;
  StagePoint to;

  friend bool operator==(const OpenGap&, const OpenGap&) = default;
};

bool arc_contains(const Arc& a, const StagePoint& x);
bool arcs_intersect(const Arc& a, const Arc& b);
/// A nonempty open arc missed by both a and b, if the two do not cover the stage.
std::optional<OpenGap> uncovered_gap(const Arc& a, const Arc& b);

/// Components of the preimage of a under phi^m_n, one per sheet, ascending start index.
std::vector<Arc> arc_preimage(std::int64_t m, const Arc& a);

struct LiftPairGap {
  std::size_t c_component = 0;
  std::size_t g_component = 0;
  OpenGap gap;
};

struct WitnessReport {
  std::int64_t p_n = 0;
  std::int64_t stage = 0;         // k(n)
  std::int64_t lifted_stage = 0;  // k(n) * p_n
  std::vector<Arc> c_components;
  std::vector<Arc> g_components;
  bool components_disjoint = false;
  /// A connected set inside a preimage lies in one component and misses the rest.
  std::int64_t components_missed_by_connected_lift = 0;
  /// For every choice of one C-component and one G-component, a gap neither covers.
  std::vector<LiftPairGap> pair_gaps;
  bool lifts_never_cover = false;
};

/// Two proper arcs C, G covering Sigma^(stage): lifts them through the p_n-fold
/// bonding map and shows no pair of connected lifts covers the next stage.
/// Throws InvalidWitnessInput when the arcs do not cover or are not proper.
WitnessReport indecomposability_witness(std::int64_t p_n, const Arc& c_arc, const Arc& g_arc);

/// True iff arcs i and j meet exactly when |i - j| <= 1 mod t.
bool circular_chain_check(std::span<const Arc> cover);

/// Pulls a cover of Sigma^(n) back through phi^m_n and lists the m*t
/// components in circular order of their start points.
std::vector<Arc> pull_back_cover(std::int64_t m, std::span<const Arc> cover);

}  // namespace solenoid
