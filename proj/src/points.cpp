#include "solenoid/points.hpp"

#include "solenoid/error.hpp"

namespace solenoid {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

void check_fraction(const Rational& t) {
  if (t < 0 || t >= 1)
    throw Error(ErrorCode::InvalidPoint, "fraction must lie in [0, 1)");
}

}  // namespace

LongPoint LongPoint::make(CnfOrdinal blocks, CnfOrdinal remainder, Rational fraction) {
  if (!blocks.below_omega_pow_omega())
    throw Error(ErrorCode::InvalidPoint, "block count must be below w^w (finite exponents)");
  check_fraction(fraction);
  LongPoint p;
  p.blocks_ = std::move(blocks);
  p.remainder_ = std::move(remainder);
  p.fraction_ = std::move(fraction);
  return p;
}

LongPoint LongPoint::omega1_multiple(CnfOrdinal blocks) {
  return make(std::move(blocks), CnfOrdinal{}, 0);
}

LongPoint LongPoint::end_max() {
  LongPoint p;
  p.end_max_ = true;
  return p;
}

bool LongPoint::is_zero() const noexcept {
  return !end_max_ && blocks_.is_zero() && remainder_.is_zero() && fraction_ == 0;
}

bool operator==(const LongPoint& a, const LongPoint& b) {
  if (a.end_max_ || b.end_max_) return a.end_max_ == b.end_max_;
  return a.blocks_ == b.blocks_ && a.remainder_ == b.remainder_ && a.fraction_ == b.fraction_;
}

std::strong_ordering operator<=>(const LongPoint& a, const LongPoint& b) {
  if (a.end_max_ || b.end_max_) return a.end_max_ <=> b.end_max_;
  if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
  if (auto c = a.remainder_ <=> b.remainder_; c != 0) return c;
  return compare_rational(a.fraction_, b.fraction_);
}

std::strong_ordering operator<=>(const BasePart& a, const BasePart& b) {
  if (auto c = a.remainder <=> b.remainder; c != 0) return c;
  return compare_rational(a.fraction, b.fraction);
}

TowerPoint TowerPoint::joint(int kappa) {
  if (kappa < 1) throw Error(ErrorCode::InvalidPoint, "tower level must be >= 1");
  TowerPoint p;
  p.kappa_ = kappa;
  p.joint_ = true;
  return p;
}

TowerPoint TowerPoint::int_stop(int kappa, std::vector<std::int64_t> ints) {
  if (kappa < 1) throw Error(ErrorCode::InvalidPoint, "tower level must be >= 1");
  if (ints.empty() || ints.size() > static_cast<std::size_t>(kappa - 1))
    throw Error(ErrorCode::InvalidPoint,
                "integer point needs between 1 and kappa-1 coordinates (kappa = " +
                    std::to_string(kappa) + ")");
  TowerPoint p;
  p.kappa_ = kappa;
  p.ints_ = std::move(ints);
  return p;
}

TowerPoint TowerPoint::base(int kappa, std::vector<std::int64_t> ints, BasePart part) {
  if (kappa < 1) throw Error(ErrorCode::InvalidPoint, "tower level must be >= 1");
  if (ints.size() != static_cast<std::size_t>(kappa - 1))
    throw Error(ErrorCode::InvalidPoint,
                "base point needs exactly kappa-1 = " + std::to_string(kappa - 1) +
                    " integer coordinates");
  check_fraction(part.fraction);
  if (part.remainder.is_zero() && part.fraction == 0)
    throw Error(ErrorCode::InvalidPoint,
                "base part must be nonzero; write the point as an integer address");
  TowerPoint p;
  p.kappa_ = kappa;
  p.ints_ = std::move(ints);
  p.base_ = std::move(part);
  return p;
}

TowerPoint TowerPoint::lower() const {
  if (kappa_ < 2 || joint_ || (is_int_stop() && ints_.size() == 1))
    throw Error(ErrorCode::InvalidPoint, "point has no lower component");
  std::vector<std::int64_t> rest(ints_.begin() + 1, ints_.end());
  if (base_) return base(kappa_ - 1, std::move(rest), *base_);
  return int_stop(kappa_ - 1, std::move(rest));
}

TowerPoint TowerPoint::prefixed(std::int64_t top) const {
  if (joint_) throw Error(ErrorCode::InvalidPoint, "the joint has no address to prefix");
  std::vector<std::int64_t> ints{top};
  ints.insert(ints.end(), ints_.begin(), ints_.end());
  if (base_) return base(kappa_ + 1, std::move(ints), *base_);
  return int_stop(kappa_ + 1, std::move(ints));
}

TowerPoint TowerPoint::shifted(std::int64_t k) const {
  if (joint_ || ints_.empty())
    throw Error(ErrorCode::UnsupportedTranslation, "point has no top integer coordinate");
  TowerPoint p = *this;
  p.ints_.front() += k;
  return p;
}

std::strong_ordering operator<=>(const TowerPoint& a, const TowerPoint& b) {
  if (a.kappa_ != b.kappa_) return a.kappa_ <=> b.kappa_;
  if (a.joint_ || b.joint_) return b.joint_ <=> a.joint_;
  const std::size_t common = std::min(a.ints_.size(), b.ints_.size());
  for (std::size_t i = 0; i < common; ++i)
    if (a.ints_[i] != b.ints_[i]) return a.ints_[i] <=> b.ints_[i];
  if (a.ints_.size() != b.ints_.size()) {
    // The shorter address is the minimum of the copy the longer one lives in.
    return a.ints_.size() <=> b.ints_.size();
  }
  if (a.base_ && b.base_) return *a.base_ <=> *b.base_;
  // Equal integers: a stop is the minimum, below any base part.
  return a.base_.has_value() <=> b.base_.has_value();
}

}  // namespace solenoid
