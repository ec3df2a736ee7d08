#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/arcs.hpp"
#include "solenoid/cohomology.hpp"
#include "solenoid/ordinal.hpp"
#include "solenoid/points.hpp"
#include "solenoid/stage.hpp"

// Text forms used on the command line. Every parser throws Error(Syntax) with
// the byte offset of the problem; every printer emits the canonical form the
// matching parser reads back.
//
//   ordinal      := term ("+" term)*
//   term         := "w" ("^" exponent)? ("*" nat)? | nat
//   exponent     := nat | "w" ("^" exponent)? | "(" ordinal ")"
//   long point   := "max" | [ "w1" ("*" nat | "*(" ordinal ")")? ] ["+" ordinal] ["+" nat "/" nat]
//   tower point  := "inf" | "[" ints "]" | "[" ints? ";" ordinal? ("+"? nat "/" nat)? "]"
//   stage point  := "inf" index | "(" index "|" copy-point ")"
//   arc          := stage-point ".." stage-point
//   descriptor   := ints? ":" ints
//   rational     := "-"? nat ("/" nat)?
//   dl element   := integer "@" level

namespace solenoid {

CnfOrdinal parse_ordinal(std::string_view text);

LongPoint parse_long_point(std::string_view text);
std::string to_string(const LongPoint& x);

TowerPoint parse_tower_point(std::string_view text, int kappa);
std::string to_string(const TowerPoint& x);

CopyPoint parse_copy_point(std::string_view text, const StageMode& mode);
std::string to_string(const CopyPoint& x);

StagePoint parse_stage_point(std::string_view text, std::int64_t stage, const StageMode& mode);
std::string to_string(const StagePoint& x);

/// Stage points separated by ";" at bracket depth zero.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// "inf0; (1| w1 + 5); ..." against bonding exponents p.
Thread parse_thread(std::string_view points, const std::vector<std::int64_t>& p, const StageMode& mode);
std::vector<std::string> to_strings(const Thread& t);

Arc parse_arc(std::string_view text, std::int64_t stage, const StageMode& mode);
std::string to_string(const Arc& a);

std::vector<std::int64_t> parse_int_list(std::string_view text);

SequenceDescriptor parse_descriptor(std::string_view text);
std::string to_string(const SequenceDescriptor& s);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

DirectLimitElement parse_dl_element(std::string_view text);
std::string to_string(const DirectLimitElement& u);

StageMode parse_mode(std::string_view text);
std::string to_string(const StageMode& mode);

}  // namespace solenoid
