#pragma once

#include <optional>

#include "solenoid/interval_aut.hpp"
#include "solenoid/points.hpp"

namespace solenoid {

/// Orbit-class label for a point of the long circle built from [0, w1 * w^w].
///   Ng(gamma)        the single NG point w1 * gamma (gamma >= 1)
///   Interval(gamma)  the maximal interval (w1 * gamma, w1 * gamma + w1)
struct OrbitClassLabel {
  enum class Kind { Ng, Interval };

  Kind kind;
  CnfOrdinal gamma;

  static OrbitClassLabel ng(CnfOrdinal gamma);
  static OrbitClassLabel interval(CnfOrdinal gamma);

  friend bool operator==(const OrbitClassLabel&, const OrbitClassLabel&) = default;
};

enum class ProofStatus { ProvenDistinct, NotProven };

struct OrbitRecipeStatus {
  enum class Status { Same, Unknown };

  Status status;
  std::optional<IntervalAutToken> token;  // set when status is Same
};

/// True iff x is a positive multiple of w1. The joint 0 is not reported here.
bool is_ng(const LongPoint& x);

/// NG points together with 0 (the joint, a limit of NG points from the left of the endpoint).
bool in_ng_closure(const LongPoint& x);

/// Requires x != 0.
OrbitClassLabel partition_class(const LongPoint& x);

/// Returns a when x = w1 * w^a exactly.
std::optional<CnfOrdinal> omega1_power_exponent(const LongPoint& x);

/// Proven distinct when x = w1*w^a, y = w1*w^b with a != b, or when exactly one of
/// x, y lies in the NG set (0 counted with it). Everything else is NotProven.
ProofStatus distinct_orbit_proof(const LongPoint& x, const LongPoint& y);

/// Same, with an interval automorphism token, iff both points carry the same
/// orbit-class label; Unknown otherwise. Requires x, y != 0.
OrbitRecipeStatus same_orbit_recipe(const LongPoint& x, const LongPoint& y);

}  // namespace solenoid
