#include <doctest.h>

#include "generators.hpp"
#include "oracles/tower_germs.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/tower.hpp"

using namespace solenoid;

namespace {

TowerPoint tp(const char* s, int kappa) { return parse_tower_point(s, kappa); }

// The germ kind of a tower point: base points are long-line interior points,
// an integer stop of depth j in Lambda_kappa sits at the ends of Lambda_(kappa-j).
oracle::Kind kind_of(const TowerPoint& p) {
  if (p.is_joint()) return {p.kappa()};
  if (p.is_base()) return {0};
  return {p.kappa() - static_cast<int>(p.depth())};
}

}  // namespace

TEST_CASE("germ oracle reproduces the known small cases") {
  const auto t = oracle::germ_types(6);
  CHECK(t.at({0}) == 1);
  CHECK(t.at({1}) == 2);
  CHECK(t.at({2}) == 3);
  for (int m = 1; m <= 6; ++m) CHECK(t.at({m}) == m + 1);
}

TEST_CASE("point types") {
  CHECK(point_type(tp("[5]", 2)) == 2);
  CHECK(point_type(tp("inf", 2)) == 3);
  // from the germ oracle: End(2), End(1), Interior
  CHECK(point_type(tp("[2]", 3)) == 3);
  CHECK(point_type(tp("[2,-1]", 3)) == 2);
  CHECK(point_type(tp("[2,-1; w + 1/2]", 3)) == 1);
  CHECK(point_type(tp("inf", 1)) == 2);
  CHECK(point_type(tp("[; 5]", 1)) == 1);
}

TEST_CASE("point types match the germ oracle on random points") {
  const auto types = oracle::germ_types(8);
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const int kappa = gen::between(rng, 1, 7);
    const auto p = gen::tower_point(rng, kappa);
    REQUIRE(point_type(p) == types.at(kind_of(p)));
  }
}

TEST_CASE("same orbit") {
  CHECK(same_orbit(tp("[3]", 2), tp("[-7]", 2)));
  CHECK_FALSE(same_orbit(tp("[3]", 2), tp("inf", 2)));
  CHECK(same_orbit(tp("[; w*2]", 1), tp("[; 5 + 1/3]", 1)));
  CHECK_THROWS_AS(same_orbit(tp("[3]", 2), tp("[3]", 3)), Error);
}

TEST_CASE("base automorphism tokens") {
  const auto w = tp("[; 5]", 1), z = tp("[; w*3]", 1);
  const auto t = base_automorphism_token(w, z);
  CHECK(t.domain() == IntervalAutToken::Domain::MetricArc);
  CHECK(t.apply(w) == CopyPoint{z});
  CHECK(t.lower() == parse_long_point("0"));
  CHECK(t.upper() == parse_long_point("w*3 + 1"));

  const auto shift = base_automorphism_token(tp("[3]", 2), tp("[8]", 2));
  CHECK(shift.is_identity());
  CHECK(shift.translation() == 5);

  const auto deep = base_automorphism_token(tp("[1,4; 2]", 3), tp("[-2,0; w]", 3));
  CHECK(deep.translation() == -3);
  CHECK(deep.source() == CopyPoint{tp("[4; 2]", 2)});
  CHECK(deep.target() == CopyPoint{tp("[0; w]", 2)});

  CHECK(base_automorphism_token(tp("[2; 1]", 2), tp("[2; 1]", 2)).is_identity());
  CHECK_THROWS_AS(base_automorphism_token(tp("[3]", 2), tp("[3; 1]", 2)), Error);
  CHECK_THROWS_AS(base_automorphism_token(tp("inf", 2), tp("inf", 2)), Error);
}

TEST_CASE("prefixing an address shifts stop types up by one") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int kappa = gen::between(rng, 1, 5);
    const auto p = gen::tower_point(rng, kappa);
    if (p.is_joint()) continue;
    const auto q = p.prefixed(gen::between(rng, -9, 9));
    CHECK(q.kappa() == kappa + 1);
    if (p.is_int_stop())
      CHECK(point_type(q) == point_type(p));
    else
      CHECK(point_type(q) == 1);
    CHECK(q.lower() == p);
  }
}

TEST_CASE("same_orbit is an equivalence with kappa + 1 classes") {
  std::mt19937 rng(11);
  for (int kappa = 1; kappa <= 5; ++kappa) {
    std::vector<TowerPoint> pts;
    for (int type = 1; type <= kappa + 1; ++type)
      for (int i = 0; i < 4; ++i) pts.push_back(gen::tower_point_of_type(rng, kappa, type));
    std::set<int> types;
    for (const auto& a : pts) {
      types.insert(point_type(a));
      for (const auto& b : pts) {
        CHECK(same_orbit(a, b) == same_orbit(b, a));
        for (const auto& c : pts)
          if (same_orbit(a, b) && same_orbit(b, c)) CHECK(same_orbit(a, c));
      }
    }
    CHECK(types.size() == static_cast<std::size_t>(kappa + 1));
  }
}
