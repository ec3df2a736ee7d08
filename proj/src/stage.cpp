#include "solenoid/stage.hpp"

#include <limits>
#include <string>

#include "solenoid/error.hpp"
#include "solenoid/long_line.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw Error(ErrorCode::BoundExceeded, "stage size overflows 64-bit index");
  return a * b;
}

void require_stage(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "stage size must be >= 1");
}

}  // namespace

StageMode StageMode::tower(int kappa) {
  if (kappa < 1) throw Error(ErrorCode::InvalidPoint, "tower level must be >= 1");
  return {Kind::Tower, kappa};
}

bool StageMode::accepts(const CopyPoint& x) const {
  if (kind == Kind::LongLine) return std::holds_alternative<LongPoint>(x);
  const auto* t = std::get_if<TowerPoint>(&x);
  return t && t->kappa() == kappa;
}

StagePoint StagePoint::joint(std::int64_t n, std::int64_t i) {
  require_stage(n);
  StagePoint p;
  p.n_ = n;
  p.i_ = mod(i, n);
  return p;
}

StagePoint StagePoint::inner(std::int64_t n, std::int64_t i, CopyPoint x) {
  require_stage(n);
  if (const auto* l = std::get_if<LongPoint>(&x)) {
    if (l->is_end_max() || l->is_zero())
      throw Error(ErrorCode::InvalidPoint, "copy endpoints are joints, not interior points");
  } else if (std::get<TowerPoint>(x).is_joint()) {
    throw Error(ErrorCode::InvalidPoint, "copy endpoints are joints, not interior points");
  }
  StagePoint p;
  p.n_ = n;
  p.i_ = mod(i, n);
  p.x_ = std::move(x);
  return p;
}

std::strong_ordering position_order(const StagePoint& a, const StagePoint& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.is_joint() || b.is_joint()) return b.is_joint() <=> a.is_joint();
  const auto& x = *a.within();
  const auto& y = *b.within();
  if (x.index() != y.index())
    throw Error(ErrorCode::DomainError, "cannot order long-line and tower coordinates together");
  if (const auto* l = std::get_if<LongPoint>(&x)) return *l <=> std::get<LongPoint>(y);
  return std::get<TowerPoint>(x) <=> std::get<TowerPoint>(y);
}

std::vector<std::int64_t> stage_sizes(std::span<const std::int64_t> p, std::size_t depth) {
  if (depth == 0) return {};
  if (p.size() + 1 < depth)
    throw Error(ErrorCode::ThreadMismatch, "not enough bonding exponents for the requested depth");
  std::vector<std::int64_t> k{1};
  for (std::size_t i = 1; i < depth; ++i) k.push_back(checked_mul(k.back(), p[i - 1]));
  return k;
}

Thread Thread::make(StageMode mode, std::vector<std::int64_t> p, std::vector<StagePoint> points) {
  if (points.empty()) throw Error(ErrorCode::ThreadMismatch, "a thread needs at least one level");
  if (p.size() + 1 != points.size())
    throw Error(ErrorCode::ThreadMismatch,
                "a depth-" + std::to_string(points.size()) + " thread needs " +
                    std::to_string(points.size() - 1) + " bonding exponents");
  for (auto v : p)
    if (v < 2) throw Error(ErrorCode::ThreadMismatch, "bonding exponents must be >= 2");
  const auto k = stage_sizes(p, points.size());
  for (std::size_t n = 0; n < points.size(); ++n) {
    const auto& x = points[n];
    if (x.stage() != k[n])
      throw Error(ErrorCode::ThreadMismatch, "level " + std::to_string(n + 1) + " must live on Sigma^(" +
                                                 std::to_string(k[n]) + ")");
    if (x.within() && !mode.accepts(*x.within()))
      throw Error(ErrorCode::ThreadMismatch, "level " + std::to_string(n + 1) +
                                                 " has a coordinate of the wrong kind for this mode");
    if (n > 0 && apply_bond(p[n - 1], k[n - 1], x) != points[n - 1])
      throw Error(ErrorCode::ThreadMismatch,
                  "levels " + std::to_string(n) + " and " + std::to_string(n + 1) +
                      " are not compatible under the bonding map");
  }
  Thread t;
  t.mode_ = mode;
  t.p_ = std::move(p);
  t.points_ = std::move(points);
  return t;
}

HomeoRecipe HomeoRecipe::make(StageMode mode, std::vector<std::int64_t> p,
                              std::vector<RecipeLevel> levels) {
  if (levels.empty()) throw Error(ErrorCode::ThreadMismatch, "a recipe needs at least one level");
  const auto k = stage_sizes(p, levels.size());
  if (p.size() + 1 != levels.size())
    throw Error(ErrorCode::ThreadMismatch, "recipe depth does not match its bonding exponents");
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const auto& lv = levels[n];
    if (lv.rot < 0 || lv.rot >= k[n])
      throw Error(ErrorCode::ThreadMismatch, "rotation at level " + std::to_string(n + 1) +
                                                 " must be reduced mod " + std::to_string(k[n]));
    if (lv.trans != levels[0].trans || lv.hat != levels[0].hat)
      throw Error(ErrorCode::ThreadMismatch, "translation and hat must be the same on every level");
  }
  if (levels[0].trans != 0 && !(mode.kind == StageMode::Kind::Tower && mode.kappa >= 2))
    throw Error(ErrorCode::UnsupportedTranslation, "translations need tower mode with kappa >= 2");
  HomeoRecipe r;
  r.mode_ = mode;
  r.p_ = std::move(p);
  r.levels_ = std::move(levels);
  return r;
}

HomeoRecipe HomeoRecipe::identity(StageMode mode, std::vector<std::int64_t> p, std::size_t depth) {
  return make(mode, std::move(p), std::vector<RecipeLevel>(depth));
}

bool HomeoRecipe::defined_at(std::size_t level, const StagePoint& x) const {
  return x.is_joint() || levels_.at(level).hat.defined_at(*x.within());
}

StagePoint HomeoRecipe::apply_level(std::size_t level, const StagePoint& x) const {
  const auto& lv = levels_.at(level);
  StagePoint y = x;
  if (!x.is_joint()) y = StagePoint::inner(x.stage(), x.index(), lv.hat.apply(*x.within()));
  if (lv.trans != 0) y = translate(lv.trans, y);
  return rotate(lv.rot, y);
}

StagePoint apply_bond(std::int64_t m, std::int64_t n, const StagePoint& x) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DomainError, "bonding map needs m, n >= 1");
  if (x.stage() != checked_mul(m, n))
    throw Error(ErrorCode::DomainError, "point lives on Sigma^(" + std::to_string(x.stage()) +
                                            "), bonding map expects Sigma^(" +
                                            std::to_string(m * n) + ")");
  if (x.is_joint()) return StagePoint::joint(n, x.index());
  return StagePoint::inner(n, x.index(), *x.within());
}

std::vector<StagePoint> fiber(std::int64_t m, std::int64_t n, const StagePoint& q) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DomainError, "bonding map needs m, n >= 1");
  if (q.stage() != n)
    throw Error(ErrorCode::DomainError, "point lives on Sigma^(" + std::to_string(q.stage()) +
                                            "), fiber expects Sigma^(" + std::to_string(n) + ")");
  const std::int64_t big = checked_mul(m, n);
  std::vector<StagePoint> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    const std::int64_t i = q.index() + k * n;
    out.push_back(q.is_joint() ? StagePoint::joint(big, i) : StagePoint::inner(big, i, *q.within()));
  }
  return out;
}

StagePoint rotate(std::int64_t k, const StagePoint& x) {
  const std::int64_t i = mod(x.index() + mod(k, x.stage()), x.stage());
  if (x.is_joint()) return StagePoint::joint(x.stage(), i);
  return StagePoint::inner(x.stage(), i, *x.within());
}

StagePoint translate(std::int64_t k, const StagePoint& x) {
  if (x.is_joint()) return x;
  const auto* t = std::get_if<TowerPoint>(&*x.within());
  if (!t || t->kappa() < 2)
    throw Error(ErrorCode::UnsupportedTranslation,
                "translation needs a tower coordinate with kappa >= 2");
  return StagePoint::inner(x.stage(), x.index(), t->shifted(k));
}

Thread apply_recipe(const HomeoRecipe& r, const Thread& t) {
  if (r.p() != t.p() || r.depth() != t.depth() || r.mode() != t.mode())
    throw Error(ErrorCode::ThreadMismatch, "recipe and thread have different depth, stages or mode");
  std::vector<StagePoint> out;
  out.reserve(t.depth());
  for (std::size_t n = 0; n < t.depth(); ++n) out.push_back(r.apply_level(n, t.points()[n]));
  return Thread::make(t.mode(), t.p(), std::move(out));
}

std::vector<StagePoint> verification_set(const HomeoRecipe& r, std::size_t level,
                                         std::int64_t address_bound) {
  const auto k = stage_sizes(r.p(), r.depth());
  const std::int64_t size = k.at(level);
  const auto& hat = r.levels().at(level).hat;
  const auto& mode = r.mode();

  // Within-copy coordinates to place in every copy.
  std::vector<CopyPoint> coords;
  if (mode.kind == StageMode::Kind::Tower && mode.kappa >= 2) {
    const int kappa = mode.kappa;
    const int deepest = std::min(kappa - 1, 2);
    for (std::int64_t a = -address_bound; a <= address_bound; ++a) {
      coords.emplace_back(TowerPoint::int_stop(kappa, {a}));
      if (deepest >= 2)
        for (std::int64_t b = -address_bound; b <= address_bound; ++b)
          coords.emplace_back(TowerPoint::int_stop(kappa, {a, b}));
      for (const auto* tracked : {&hat.source(), &hat.target()})
        if (*tracked) coords.emplace_back(std::get<TowerPoint>(**tracked).prefixed(a));
    }
  } else {
    // Fixed sample points; kept only where the hat is defined.
    if (mode.kind == StageMode::Kind::LongLine) {
      coords.emplace_back(LongPoint::make(CnfOrdinal{}, CnfOrdinal::natural(5)));
      coords.emplace_back(LongPoint::omega1_multiple(CnfOrdinal::natural(1)));
      coords.emplace_back(LongPoint::make(CnfOrdinal::omega(), CnfOrdinal{}, Rational(1, 2)));
    } else {
      coords.emplace_back(TowerPoint::base(1, {}, BasePart{CnfOrdinal::natural(5), 0}));
      coords.emplace_back(TowerPoint::base(1, {}, BasePart{CnfOrdinal::omega(), Rational(1, 2)}));
    }
    for (const auto* tracked : {&hat.source(), &hat.target()})
      if (*tracked) coords.push_back(**tracked);
    for (const auto* bound : {&hat.lower(), &hat.upper()}) {
      if (!*bound || (*bound)->is_zero()) continue;
      if (mode.kind == StageMode::Kind::LongLine) {
        coords.emplace_back(**bound);
      } else {
        coords.emplace_back(TowerPoint::base(1, {}, BasePart{(*bound)->remainder(), (*bound)->fraction()}));
      }
    }
  }

  std::vector<StagePoint> out;
  for (std::int64_t i = 0; i < size; ++i) {
    out.push_back(StagePoint::joint(size, i));
    for (const auto& c : coords) {
      auto x = StagePoint::inner(size, i, c);
      if (r.defined_at(level, x)) out.push_back(std::move(x));
    }
  }
  return out;
}

CommuteReport verify_commutes(const HomeoRecipe& r, std::size_t depth, std::int64_t address_bound) {
  if (depth > r.depth())
    throw Error(ErrorCode::ThreadMismatch, "verification depth exceeds recipe depth");
  const auto k = stage_sizes(r.p(), r.depth());
  CommuteReport report;
  for (std::size_t n = 0; n + 1 < depth; ++n) {
    const std::int64_t m = r.p()[n];
    for (const auto& x : verification_set(r, n + 1, address_bound)) {
      ++report.checked;
      auto upper = apply_bond(m, k[n], r.apply_level(n + 1, x));
      auto lower = r.apply_level(n, apply_bond(m, k[n], x));
      if (upper != lower) {
        report.ok = false;
        report.counterexample = CommuteCounterexample{n + 1, x, std::move(upper), std::move(lower)};
        return report;
      }
    }
  }
  return report;
}

namespace {

void require_compatible(const Thread& x, const Thread& y) {
  if (x.p() != y.p() || x.depth() != y.depth() || x.mode() != y.mode())
    throw Error(ErrorCode::ThreadMismatch, "threads differ in bonding exponents, depth or mode");
}

std::vector<std::int64_t> rotations_between(const Thread& x, const Thread& y) {
  const auto k = stage_sizes(x.p(), x.depth());
  std::vector<std::int64_t> l;
  for (std::size_t n = 0; n < x.depth(); ++n)
    l.push_back(mod(y.points()[n].index() - x.points()[n].index(), k[n]));
  return l;
}

RecipeStatus build(const Thread& x, const Thread& y, std::int64_t trans, const IntervalAutToken& hat) {
  std::vector<RecipeLevel> levels;
  for (auto l : rotations_between(x, y)) levels.push_back(RecipeLevel{l, trans, hat});
  auto r = HomeoRecipe::make(x.mode(), x.p(), std::move(levels));
  if (apply_recipe(r, x) != y)
    throw Error(ErrorCode::DomainError, "synthesized recipe does not carry x to y");
  return {RecipeStatus::Kind::Recipe, std::move(r)};
}

LongPoint long_coordinate(const StagePoint& s) {
  return s.is_joint() ? LongPoint{} : std::get<LongPoint>(*s.within());
}

TowerPoint tower_coordinate(const StagePoint& s, int kappa) {
  return s.is_joint() ? TowerPoint::joint(kappa) : std::get<TowerPoint>(*s.within());
}

}  // namespace

RecipeStatus synthesize_recipe(const Thread& x, const Thread& y) {
  require_compatible(x, y);
  const auto& x1 = x.points().front();
  const auto& y1 = y.points().front();
  const auto identity = IntervalAutToken::identity();
  if (x1.is_joint() && y1.is_joint()) return build(x, y, 0, identity);

  if (x.mode().kind == StageMode::Kind::Tower) {
    const int kappa = x.mode().kappa;
    const auto a = tower_coordinate(x1, kappa);
    const auto b = tower_coordinate(y1, kappa);
    if (!same_orbit(a, b)) return {RecipeStatus::Kind::ProvenDistinct, std::nullopt};
    const auto token = base_automorphism_token(a, b);
    return build(x, y, token.translation(), token);
  }

  const auto a = long_coordinate(x1);
  const auto b = long_coordinate(y1);
  if (distinct_orbit_proof(a, b) == ProofStatus::ProvenDistinct)
    return {RecipeStatus::Kind::ProvenDistinct, std::nullopt};
  if (a.is_zero() || b.is_zero()) return {RecipeStatus::Kind::Unknown, std::nullopt};
  const auto status = same_orbit_recipe(a, b);
  if (status.status == OrbitRecipeStatus::Status::Unknown)
    return {RecipeStatus::Kind::Unknown, std::nullopt};
  return build(x, y, 0, *status.token);
}

std::vector<Thread> extend_thread(const Thread& t, std::span<const std::int64_t> p,
                                  std::size_t levels) {
  const std::size_t have = t.p().size();
  if (p.size() < have + levels || !std::equal(t.p().begin(), t.p().end(), p.begin()))
    throw Error(ErrorCode::ThreadMismatch,
                "bonding sequence must extend the thread's exponents by the requested levels");
  std::vector<std::int64_t> full(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(have + levels));
  const auto k = stage_sizes(full, t.depth() + levels);

  std::vector<std::vector<StagePoint>> frontier{t.points()};
  for (std::size_t step = 0; step < levels; ++step) {
    const std::size_t n = have + step;  // index of the bonding exponent used
    std::vector<std::vector<StagePoint>> next;
    for (const auto& prefix : frontier) {
      for (auto& lift : fiber(full[n], k[n], prefix.back())) {
        auto longer = prefix;
        longer.push_back(std::move(lift));
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Thread> out;
  out.reserve(frontier.size());
  for (auto& pts : frontier) out.push_back(Thread::make(t.mode(), full, std::move(pts)));
  return out;
}

}  // namespace solenoid
