#include "solenoid/long_line.hpp"

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void require_inner(const LongPoint& x) {
  if (x.is_end_max())
    throw Error(ErrorCode::EndpointNotInDomain,
                "the endpoint w1*w^w is identified with the joint; pass 0 instead");
}

void require_nonzero(const LongPoint& x) {
  require_inner(x);
  if (x.is_zero()) throw Error(ErrorCode::InvalidPoint, "the joint 0 has no orbit-class label");
}

}  // namespace

OrbitClassLabel OrbitClassLabel::ng(CnfOrdinal gamma) {
  if (gamma.is_zero()) throw Error(ErrorCode::InvalidPoint, "NG class needs gamma >= 1");
  return {Kind::Ng, std::move(gamma)};
}

OrbitClassLabel OrbitClassLabel::interval(CnfOrdinal gamma) {
  return {Kind::Interval, std::move(gamma)};
}

bool is_ng(const LongPoint& x) {
  require_inner(x);
  return !x.blocks().is_zero() && x.remainder().is_zero() && x.fraction() == 0;
}

bool in_ng_closure(const LongPoint& x) { return x.is_zero() || is_ng(x); }

OrbitClassLabel partition_class(const LongPoint& x) {
  require_nonzero(x);
  if (is_ng(x)) return OrbitClassLabel::ng(x.blocks());
  return OrbitClassLabel::interval(x.blocks());
}

std::optional<CnfOrdinal> omega1_power_exponent(const LongPoint& x) {
  if (x.is_end_max() || !is_ng(x)) return std::nullopt;
  const auto& ts = x.blocks().terms();
  if (ts.size() != 1 || ts[0].coefficient != 1) return std::nullopt;
  return ts[0].exponent;
}

ProofStatus distinct_orbit_proof(const LongPoint& x, const LongPoint& y) {
  require_inner(x);
  require_inner(y);
  if (x == y) return ProofStatus::NotProven;
  const auto a = omega1_power_exponent(x);
  const auto b = omega1_power_exponent(y);
  if (a && b && *a != *b) return ProofStatus::ProvenDistinct;
  if (in_ng_closure(x) != in_ng_closure(y)) return ProofStatus::ProvenDistinct;
  return ProofStatus::NotProven;
}

OrbitRecipeStatus same_orbit_recipe(const LongPoint& x, const LongPoint& y) {
  require_nonzero(x);
  require_nonzero(y);
  const auto lx = partition_class(x);
  const auto ly = partition_class(y);
  if (lx != ly) return {OrbitRecipeStatus::Status::Unknown, std::nullopt};
  if (lx.kind == OrbitClassLabel::Kind::Ng) {
    // One point per NG class, so x == y here.
    return {OrbitRecipeStatus::Status::Same, IntervalAutToken::identity()};
  }
  const auto lo = LongPoint::omega1_multiple(lx.gamma);
  const auto hi = LongPoint::omega1_multiple(add(lx.gamma, CnfOrdinal::natural(1)));
  return {OrbitRecipeStatus::Status::Same, IntervalAutToken::long_line_interval(x, y, lo, hi)};
}

}  // namespace solenoid
