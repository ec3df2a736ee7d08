#include <doctest.h>

#include <array>
#include <numeric>

#include "generators.hpp"
#include "oracles/discrete_circle.hpp"
#include "solenoid/arcs.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"

using namespace solenoid;

namespace {

const StageMode kLong = StageMode::long_line();

const std::vector<const char*> kPool = {"1/2", "3", "w", "w*2 + 1/3", "w1", "w1 + 5", "w1*2", "w1*(w)"};

std::vector<CopyPoint> pool_coords() {
  std::vector<CopyPoint> out;
  for (auto s : kPool) out.push_back(parse_long_point(s));
  return out;
}

// All points of Sigma^(n) built from the pool, in circular order.
std::vector<StagePoint> circle_points(std::int64_t n) {
  std::vector<StagePoint> out;
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(StagePoint::joint(n, i));
    for (auto s : kPool) out.push_back(StagePoint::inner(n, i, parse_long_point(s)));
  }
  return out;
}

Arc random_arc(std::mt19937& rng, const std::vector<StagePoint>& pts) {
  for (;;) {
    const auto& a = pts[gen::between(rng, 0, static_cast<int>(pts.size()) - 1)];
    const auto& b = pts[gen::between(rng, 0, static_cast<int>(pts.size()) - 1)];
    if (!(a == b)) return Arc::make(a, b);
  }
}

Arc A(std::int64_t n, const char* s) { return parse_arc(s, n, kLong); }

// t arcs over 2t points in circular order: arc i runs from q[2i] to q[2i+3].
std::vector<Arc> chain_over(const std::vector<StagePoint>& q) {
  const std::size_t t = q.size() / 2;
  std::vector<Arc> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back(Arc::make(q[2 * i], q[(2 * i + 3) % q.size()]));
  return out;
}

std::vector<StagePoint> sample_sorted(std::mt19937& rng, const std::vector<StagePoint>& pts, std::size_t k) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<StagePoint> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

}  // namespace

TEST_CASE("arc basics") {
  const auto a = A(2, "inf0 .. (1| 3)");
  CHECK(arc_contains(a, StagePoint::joint(2, 1)));
  CHECK(arc_contains(a, parse_stage_point("(0| w1)", 2, kLong)));
  CHECK_FALSE(arc_contains(a, parse_stage_point("(1| w)", 2, kLong)));
  const auto wrap = A(2, "(1| w) .. (0| 1/2)");
  CHECK(arc_contains(wrap, StagePoint::joint(2, 0)));
  CHECK(arcs_intersect(a, wrap));
  CHECK_FALSE(arcs_intersect(A(2, "inf0 .. (0| 3)"), A(2, "(0| w) .. (1| 3)")));
  CHECK(arcs_intersect(A(2, "inf0 .. (0| 3)"), A(2, "(0| 3) .. (1| 3)")));
  CHECK_THROWS_AS(A(2, "inf1 .. inf1"), Error);
  CHECK_THROWS_AS(Arc::make(StagePoint::joint(2, 0), StagePoint::joint(3, 1)), Error);
  CHECK_FALSE(uncovered_gap(A(1, "inf0 .. (0| w1)"), A(1, "(0| w) .. inf0")).has_value());
  const auto gap = uncovered_gap(A(1, "inf0 .. (0| 3)"), A(1, "(0| w) .. inf0"));
  REQUIRE(gap.has_value());
  CHECK(gap->from == parse_stage_point("(0| 3)", 1, kLong));
  CHECK(gap->to == parse_stage_point("(0| w)", 1, kLong));
}

TEST_CASE("preimages of arcs") {
  const auto a = A(3, "(2| 5) .. (0| w)");
  const auto comps = arc_preimage(2, a);
  REQUIRE(comps.size() == 2);
  CHECK(to_string(comps[0]) == "(2| 5) .. (3| w)");
  CHECK(to_string(comps[1]) == "(5| 5) .. (0| w)");
  const auto whole_copies = arc_preimage(3, A(2, "inf0 .. inf1"));
  CHECK(whole_copies.size() == 3);
  CHECK(to_string(whole_copies[2]) == "inf4 .. inf5");
}

TEST_CASE("arc operations agree with the discrete circle") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const std::int64_t n = gen::between(rng, 1, 4);
    const auto pts = circle_points(n);
    const oracle::DiscreteCircle circle(n, pool_coords());
    const auto a = random_arc(rng, pts), b = random_arc(rng, pts);
    const auto ca = circle.cover(a), cb = circle.cover(b);
    REQUIRE(arcs_intersect(a, b) == oracle::any_common(ca, cb));
    for (const auto& x : pts) REQUIRE(arc_contains(a, x) == ca[static_cast<std::size_t>(circle.slot(x))]);
    const auto gap = uncovered_gap(a, b);
    REQUIRE(gap.has_value() == !oracle::all_covered(ca, cb));
    if (gap) {
      // every slot strictly inside the gap is missed by both arcs, and there is one
      const auto from = circle.slot(gap->from), to = circle.slot(gap->to);
      std::int64_t inside = 0;
      for (auto s = (from + 1) % circle.size(); s != to; s = (s + 1) % circle.size(), ++inside)
        REQUIRE_FALSE((ca[static_cast<std::size_t>(s)] || cb[static_cast<std::size_t>(s)]));
      REQUIRE(inside > 0);
    }
    const std::int64_t m = gen::between(rng, 1, 4);
    const oracle::DiscreteCircle big(m * n, pool_coords());
    std::vector<bool> pulled(static_cast<std::size_t>(big.size()));
    for (std::int64_t s = 0; s < big.size(); ++s)
      pulled[static_cast<std::size_t>(s)] = ca[static_cast<std::size_t>(s % circle.size())];
    const auto comps = arc_preimage(m, a);
    REQUIRE(comps.size() == static_cast<std::size_t>(m));
    REQUIRE(oracle::DiscreteCircle::runs(pulled) == static_cast<std::size_t>(m));
    std::vector<bool> united(pulled.size(), false);
    for (const auto& c : comps) {
      const auto cc = big.cover(c);
      REQUIRE(oracle::DiscreteCircle::runs(cc) == 1);
      for (std::size_t i = 0; i < cc.size(); ++i) {
        REQUIRE_FALSE((cc[i] && united[i]));
        united[i] = united[i] || cc[i];
      }
    }
    REQUIRE(united == pulled);
  }
}

TEST_CASE("indecomposability witness") {
  const auto c = A(1, "inf0 .. (0| w1)"), g = A(1, "(0| w) .. (0| 1/2)");
  for (std::int64_t p : {2, 3}) {
    const auto rep = indecomposability_witness(p, c, g);
    CHECK(rep.c_components.size() == static_cast<std::size_t>(p));
    CHECK(rep.g_components.size() == static_cast<std::size_t>(p));
    CHECK(rep.components_disjoint);
    CHECK(rep.components_missed_by_connected_lift == p - 1);
    CHECK(rep.pair_gaps.size() == static_cast<std::size_t>(p * p));
    CHECK(rep.lifts_never_cover);
    CHECK(rep.lifted_stage == p);
  }
  CHECK_THROWS_AS(indecomposability_witness(2, A(1, "inf0 .. (0| 3)"), A(1, "(0| w) .. inf0")), Error);
  CHECK_THROWS_AS(indecomposability_witness(1, c, g), Error);
}

TEST_CASE("witness gaps are real on the discrete circle") {
  std::mt19937 rng(29);
  int covering = 0;
  while (covering < 100) {
    const std::int64_t n = gen::between(rng, 1, 3);
    const auto pts = circle_points(n);
    const auto a = random_arc(rng, pts), b = random_arc(rng, pts);
    const oracle::DiscreteCircle circle(n, pool_coords());
    if (!oracle::all_covered(circle.cover(a), circle.cover(b))) {
      CHECK_THROWS_AS(indecomposability_witness(2, a, b), Error);
      continue;
    }
    ++covering;
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[covering % 3];
    const auto rep = indecomposability_witness(p, a, b);
    const oracle::DiscreteCircle big(n * p, pool_coords());
    REQUIRE(rep.pair_gaps.size() == static_cast<std::size_t>(p * p));
    for (const auto& ci : rep.c_components)
      for (const auto& gi : rep.g_components) REQUIRE_FALSE(oracle::all_covered(big.cover(ci), big.cover(gi)));
  }
}

TEST_CASE("circular chains") {
  const auto four = std::vector<Arc>{A(2, "inf0 .. (0| w1)"), A(2, "(0| 5) .. (1| 5)"),
                                     A(2, "(1| 3) .. (1| w1)"), A(2, "(1| w1) .. (0| 3)")};
  CHECK(circular_chain_check(four));
  auto crossed = four;
  crossed[0] = A(2, "inf0 .. (1| 4)");
  CHECK_FALSE(circular_chain_check(crossed));
  // with three arcs every pair is adjacent
  const auto three = std::vector<Arc>{A(1, "inf0 .. (0| w)"), A(1, "(0| 5) .. (0| w1)"), A(1, "(0| w*2) .. (0| 1/2)")};
  CHECK(circular_chain_check(three));
  const auto pulled = pull_back_cover(3, four);
  CHECK(pulled.size() == 12);
  CHECK(circular_chain_check(pulled));
}

TEST_CASE("random chains and their pullbacks") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const std::int64_t n = gen::between(rng, 1, 6);
    const auto pts = circle_points(n);
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(gen::between(rng, 3, 7)), pts.size() / 2);
    auto cover = chain_over(sample_sorted(rng, pts, 2 * t));
    std::rotate(cover.begin(), cover.begin() + gen::between(rng, 0, static_cast<int>(t) - 1), cover.end());
    auto oracle_chain = [&](const std::vector<Arc>& arcs) {
      const std::size_t k = arcs.size();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t d = std::min((i + k - j) % k, (j + k - i) % k);
          const oracle::DiscreteCircle c(arcs[0].stage(), pool_coords());
          if (oracle::any_common(c.cover(arcs[i]), c.cover(arcs[j])) != (d <= 1)) return false;
        }
      return true;
    };
    REQUIRE(oracle_chain(cover));
    REQUIRE(circular_chain_check(cover));
    const std::int64_t m = gen::between(rng, 1, 6);
    const auto pulled = pull_back_cover(m, cover);
    REQUIRE(pulled.size() == static_cast<std::size_t>(m) * t);
    REQUIRE(circular_chain_check(pulled));
    // lengthen one arc over its second neighbor
    auto broken = cover;
    broken[0] = Arc::make(cover[0].start, cover[2].start);
    if (t >= 4) REQUIRE_FALSE(circular_chain_check(broken));
    REQUIRE(circular_chain_check(broken) == oracle_chain(broken));
  }
}
