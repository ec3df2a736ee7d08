#include "solenoid/arcs.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Order of points along the circle read forward from `origin`.
std::strong_ordering cyclic_order(const StagePoint& origin, const StagePoint& x, const StagePoint& y) {
  const bool x_wraps = position_order(x, origin) < 0;
  const bool y_wraps = position_order(y, origin) < 0;
  if (x_wraps != y_wraps) return x_wraps <=> y_wraps;
  return position_order(x, y);
}

// Open arc (u, v) between consecutive breakpoints lies inside the closed arc a.
bool elementary_inside(const Arc& a, const StagePoint& u, const StagePoint& v) {
  return cyclic_order(a.start, u, v) < 0 && cyclic_order(a.start, v, a.end) <= 0;
}

StagePoint place(const StagePoint& like, std::int64_t stage, std::int64_t index) {
  if (like.is_joint()) return StagePoint::joint(stage, index);
  return StagePoint::inner(stage, index, *like.within());
}

}  // namespace

Arc Arc::make(StagePoint start, StagePoint end) {
  if (start.stage() != end.stage())
    throw Error(ErrorCode::DomainError, "arc endpoints live on different stages");
  if (start == end) throw Error(ErrorCode::DomainError, "arc endpoints must differ");
  (void)position_order(start, end);  // rejects mixed coordinate kinds
  return Arc{std::move(start), std::move(end)};
}

bool arc_contains(const Arc& a, const StagePoint& x) {
  return cyclic_order(a.start, x, a.end) <= 0;
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  if (a.stage() != b.stage()) throw Error(ErrorCode::DomainError, "arcs live on different stages");
  return arc_contains(a, b.start) || arc_contains(b, a.start);
}

std::optional<OpenGap> uncovered_gap(const Arc& a, const Arc& b) {
  if (a.stage() != b.stage()) throw Error(ErrorCode::DomainError, "arcs live on different stages");
  std::vector<StagePoint> cuts{a.start, a.end, b.start, b.end};
  std::sort(cuts.begin(), cuts.end(),
            [](const StagePoint& x, const StagePoint& y) { return position_order(x, y) < 0; });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const auto& u = cuts[i];
    const auto& v = cuts[(i + 1) % cuts.size()];
    if (!elementary_inside(a, u, v) && !elementary_inside(b, u, v)) return OpenGap{u, v};
  }
  return std::nullopt;
}

std::vector<Arc> arc_preimage(std::int64_t m, const Arc& a) {
  if (m < 1) throw Error(ErrorCode::DomainError, "covering degree must be >= 1");
  const std::int64_t n = a.stage();
  std::int64_t span = mod(a.end.index() - a.start.index(), n);
  if (span == 0 && position_order(a.end, a.start) < 0) span = n;
  std::vector<Arc> out;
  for (std::int64_t k = 0; k < m; ++k) {
    const std::int64_t first = a.start.index() + k * n;
    out.push_back(Arc::make(place(a.start, m * n, first), place(a.end, m * n, first + span)));
  }
  return out;
}

WitnessReport indecomposability_witness(std::int64_t p_n, const Arc& c_arc, const Arc& g_arc) {
  if (p_n < 2) throw Error(ErrorCode::InvalidWitnessInput, "bonding exponent must be >= 2");
  if (c_arc.stage() != g_arc.stage())
    throw Error(ErrorCode::InvalidWitnessInput, "arcs live on different stages");
  if (uncovered_gap(c_arc, g_arc))
    throw Error(ErrorCode::InvalidWitnessInput, "the two arcs do not cover the stage");

  WitnessReport r;
  r.p_n = p_n;
  r.stage = c_arc.stage();
  r.lifted_stage = c_arc.stage() * p_n;
  r.c_components = arc_preimage(p_n, c_arc);
  r.g_components = arc_preimage(p_n, g_arc);

  r.components_disjoint = true;
  for (const auto* comps : {&r.c_components, &r.g_components})
    for (std::size_t i = 0; i < comps->size(); ++i)
      for (std::size_t j = i + 1; j < comps->size(); ++j)
        if (arcs_intersect((*comps)[i], (*comps)[j])) r.components_disjoint = false;
  r.components_missed_by_connected_lift = r.components_disjoint ? p_n - 1 : 0;

  r.lifts_never_cover = true;
  for (std::size_t i = 0; i < r.c_components.size(); ++i) {
    for (std::size_t j = 0; j < r.g_components.size(); ++j) {
      auto gap = uncovered_gap(r.c_components[i], r.g_components[j]);
      if (!gap) {
        r.lifts_never_cover = false;
        continue;
      }
      r.pair_gaps.push_back(LiftPairGap{i, j, std::move(*gap)});
    }
  }
  return r;
}

bool circular_chain_check(std::span<const Arc> cover) {
  const std::size_t t = cover.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const std::size_t gap = std::min(j - i, t - (j - i));
      if (arcs_intersect(cover[i], cover[j]) != (gap <= 1)) return false;
    }
  }
  return true;
}

std::vector<Arc> pull_back_cover(std::int64_t m, std::span<const Arc> cover) {
  std::vector<Arc> out;
  for (const auto& a : cover) {
    auto comps = arc_preimage(m, a);
    out.insert(out.end(), comps.begin(), comps.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Arc& x, const Arc& y) {
    return position_order(x.start, y.start) < 0;
  });
  return out;
}

}  // namespace solenoid
