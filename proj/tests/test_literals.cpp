#include <doctest.h>

#include "generators.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"

using namespace solenoid;

namespace {

std::optional<std::size_t> syntax_position(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Syntax) return e.position();
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("ordinal literals") {
  const auto a = parse_ordinal("w^2*3 + w + 5");
  REQUIRE(a.terms().size() == 3);
  CHECK(a.terms()[0].exponent == CnfOrdinal::natural(2));
  CHECK(a.terms()[0].coefficient == 3);
  CHECK(to_string(a) == "w^2*3 + w + 5");
  CHECK(parse_ordinal("w + w^2") == parse_ordinal("w^2"));
  CHECK(parse_ordinal("  w^1*1+0 ") == CnfOrdinal::omega());
  CHECK(parse_ordinal("w^w^2") == CnfOrdinal::monomial(CnfOrdinal::monomial(CnfOrdinal::natural(2), 1), 1));
  CHECK(parse_ordinal("ω^(ω+1)") == parse_ordinal("w^(w + 1)"));
  CHECK(parse_ordinal("3 + w") == CnfOrdinal::omega());
  CHECK(to_string(parse_ordinal("0")) == "0");
  CHECK(to_string(parse_ordinal("w^(w*2 + 1)*4")) == "w^(w*2 + 1)*4");
  CHECK(to_string(parse_ordinal("w^w")) == "w^w");
}

TEST_CASE("ordinal syntax errors carry a position") {
  CHECK(syntax_position([] { parse_ordinal("w + "); }) == 4);
  CHECK(syntax_position([] { parse_ordinal("w^"); }) == 2);
  CHECK(syntax_position([] { parse_ordinal("w^(2"); }) == 4);
  CHECK(syntax_position([] { parse_ordinal("w 3"); }) == 2);
  CHECK(syntax_position([] { parse_ordinal(""); }) == 0);
  CHECK(syntax_position([] { parse_ordinal("w1"); }) == 0);
}

TEST_CASE("long point literals") {
  const auto x = parse_long_point("w1*(w^2) + w*5 + 1/2");
  CHECK(x.blocks() == parse_ordinal("w^2"));
  CHECK(x.remainder() == parse_ordinal("w*5"));
  CHECK(x.fraction() == Rational(1, 2));
  CHECK(parse_long_point("w1") == LongPoint::omega1_multiple(CnfOrdinal::natural(1)));
  CHECK(parse_long_point("w1*3 + 2") == LongPoint::make(CnfOrdinal::natural(3), CnfOrdinal::natural(2)));
  CHECK(parse_long_point("1/3") == LongPoint::make({}, {}, Rational(1, 3)));
  CHECK(parse_long_point("0").is_zero());
  CHECK(parse_long_point("max").is_end_max());
  CHECK(to_string(parse_long_point("w1*(2) + w")) == "w1*(2) + w");
  CHECK(syntax_position([] { parse_long_point("w1 + 3/2"); }).has_value());
  CHECK(syntax_position([] { parse_long_point("w1*(w^w)"); }).has_value());
  CHECK(syntax_position([] { parse_long_point("w1 +"); }) == 4);
}

TEST_CASE("tower point literals") {
  CHECK(parse_tower_point("inf", 3).is_joint());
  const auto s = parse_tower_point("[2,-1]", 3);
  CHECK(s.is_int_stop());
  CHECK(s.ints() == std::vector<std::int64_t>{2, -1});
  const auto b = parse_tower_point("[2,-1; w + 1/2]", 3);
  CHECK(b.is_base());
  CHECK(b.base_part()->remainder == CnfOrdinal::omega());
  CHECK(to_string(b) == "[2,-1; w + 1/2]");
  CHECK(to_string(parse_tower_point("[; 5]", 1)) == "[; 5]");
  CHECK(syntax_position([] { parse_tower_point("[1,2,3]", 3); }).has_value());
  CHECK(syntax_position([] { parse_tower_point("[1; 0]", 2); }).has_value());
  CHECK(syntax_position([] { parse_tower_point("[1", 2); }) == 2);
}

TEST_CASE("stage point, arc and thread literals") {
  const auto m = StageMode::tower(2);
  CHECK(parse_stage_point("inf7", 6, m) == StagePoint::joint(6, 1));
  const auto p = parse_stage_point("(2| [3])", 6, m);
  CHECK(to_string(p) == "(2| [3])");
  const auto a = parse_arc("inf0 .. (1| [4; 1/2])", 2, m);
  CHECK(to_string(a) == "inf0 .. (1| [4; 1/2])");
  const auto t = parse_thread("inf0; inf1; inf3", {2, 3}, StageMode::long_line());
  CHECK(to_strings(t) == std::vector<std::string>{"inf0", "inf1", "inf3"});
  CHECK_THROWS_AS(parse_thread("inf0; inf1", {2, 3}, StageMode::long_line()), Error);
  CHECK(split_top_level("(0| [1; 2]); inf3", ';').size() == 2);
}

TEST_CASE("descriptor, rational and direct-limit literals") {
  const auto s = parse_descriptor("12:5");
  CHECK(s.prefix() == std::vector<std::uint64_t>{12});
  CHECK(s.cycle() == std::vector<std::uint64_t>{5});
  CHECK(to_string(parse_descriptor(":2,3")) == ":2,3");
  CHECK_THROWS_AS(parse_descriptor("2:"), Error);
  CHECK_THROWS_AS(parse_descriptor(":1"), Error);
  CHECK(parse_rational("-5/8") == Rational(-5, 8));
  CHECK(parse_rational("4/2") == 2);
  CHECK(to_string(Rational(7, 6)) == "7/6");
  CHECK(syntax_position([] { parse_rational("1/0"); }) == 2);
  CHECK(parse_dl_element("-3@2") == DirectLimitElement{2, -3});
  CHECK(to_string(DirectLimitElement{4, 9}) == "9@4");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen::ordinal(rng, 3);
    REQUIRE(parse_ordinal(to_string(a)) == a);
    const auto x = gen::long_point(rng);
    REQUIRE(parse_long_point(to_string(x)) == x);
    const int kappa = gen::between(rng, 1, 5);
    const auto t = gen::tower_point(rng, kappa);
    REQUIRE(parse_tower_point(to_string(t), kappa) == t);
    const auto d = gen::descriptor(rng);
    REQUIRE(parse_descriptor(to_string(d)) == d);
    const auto u = DirectLimitElement{static_cast<std::size_t>(gen::between(rng, 0, 6)), gen::between(rng, -99, 99)};
    REQUIRE(parse_dl_element(to_string(u)) == u);
    if (t.is_joint()) continue;
    const auto sp = StagePoint::inner(6, gen::between(rng, 0, 5), t);
    REQUIRE(parse_stage_point(to_string(sp), 6, StageMode::tower(kappa)) == sp);
  }
}
