#pragma once

#include "solenoid/interval_aut.hpp"
#include "solenoid/points.hpp"

namespace solenoid {

/// Topological type of a point of the circle over Lambda_kappa, in 1..kappa+1.
///
/// A base point has type 1, an integer point of depth j has type kappa+1-j,
/// and the joint has type kappa+1 (the top class, shared by nothing else).
int point_type(const TowerPoint& p);

/// Same orbit of S(Lambda_kappa, p) iff same type. Throws LevelMismatch for
/// points of different towers.
bool same_orbit(const TowerPoint& x, const TowerPoint& y);

/// Endpoint-fixing automorphism carrying the within-copy part of x to that of
/// y, together with the top-level translation k = q - p to compose with it.
/// Requires same_orbit(x, y) and neither point the joint.
IntervalAutToken base_automorphism_token(const TowerPoint& x, const TowerPoint& y);

}  // namespace solenoid
