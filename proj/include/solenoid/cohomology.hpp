#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "solenoid/points.hpp"

namespace solenoid {

using Integer = boost::multiprecision::cpp_int;

/// Eventually periodic bonding sequence: prefix, then cycle repeated forever.
class SequenceDescriptor {
 public:
  /// Throws InvalidDescriptor unless every entry is >= 2 and the cycle is nonempty.
  static SequenceDescriptor make(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> cycle);

  const std::vector<std::uint64_t>& prefix() const noexcept { return prefix_; }
  const std::vector<std::uint64_t>& cycle() const noexcept { return cycle_; }
  /// p_i for i >= 1.
  std::uint64_t term(std::size_t i) const;
  /// p_1 * ... * p_n (1 for n = 0).
  Integer product(std::size_t n) const;

  friend bool operator==(const SequenceDescriptor&, const SequenceDescriptor&) = default;

 private:
  SequenceDescriptor() = default;

  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> cycle_;
};

/// Formal product of primes with multiplicities in N u {inf}.
struct SupernaturalNumber {
  std::map<std::uint64_t, std::uint64_t> finite;  // prime -> multiplicity >= 1
  std::set<std::uint64_t> infinite;               // primes with multiplicity inf

  /// Multiplicity of a prime; nullopt stands for infinity.
  std::optional<std::uint64_t> multiplicity(std::uint64_t prime) const;

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;
};

/// Prime factorization by trial division, ascending primes with repetition.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

SupernaturalNumber supernatural_of(const SequenceDescriptor& s);

/// Q(p) = Q(q) up to isomorphism. For eventually periodic sequences only
/// finitely many primes have finite multiplicity, so the finite parts always
/// differ by finitely much and equality of the infinite prime sets decides it.
bool mccord_equivalent(const SequenceDescriptor& a, const SequenceDescriptor& b);

/// Whether r lies in Q(p): its reduced denominator divides some p_1 ... p_n.
bool member(const SequenceDescriptor& s, const Rational& r);

/// numerator / (p_1 ... p_level) in the direct limit Z -p1-> Z -p2-> ...
struct DirectLimitElement {
  std::size_t level = 0;
  Integer numerator = 0;

  friend bool operator==(const DirectLimitElement&, const DirectLimitElement&) = default;
};

/// Lowest level at which the element is represented.
DirectLimitElement canonical(const SequenceDescriptor& s, DirectLimitElement u);
/// Image of u at a later level (multiply through the intermediate p_i).
DirectLimitElement lift(const SequenceDescriptor& s, const DirectLimitElement& u, std::size_t level);
DirectLimitElement dl_add(const SequenceDescriptor& s, const DirectLimitElement& u,
                          const DirectLimitElement& v);
DirectLimitElement dl_negate(const SequenceDescriptor& s, const DirectLimitElement& u);
bool dl_equal(const SequenceDescriptor& s, const DirectLimitElement& u, const DirectLimitElement& v);
Rational dl_value(const SequenceDescriptor& s, const DirectLimitElement& u);
/// The element with the given value; throws DomainError if r is not in Q(p).
DirectLimitElement dl_from_rational(const SequenceDescriptor& s, const Rational& r);

/// A map Sigma^(source) -> Sigma^(target) sending copy i of the source onto
/// copy image[i].copy with the given orientation (+1, -1, or 0 for a copy
/// collapsed onto its starting joint).
struct StageMap {
  struct Piece {
    std::int64_t copy = 0;
    int orientation = 1;
  };

  std::int64_t source = 1;
  std::int64_t target = 1;
  std::vector<Piece> pieces;
};

/// phi^m_n as a StageMap.
StageMap bond_stage_map(std::int64_t m, std::int64_t n);
/// outer o inner.
StageMap compose(const StageMap& outer, const StageMap& inner);
/// Signed number of times the image of the cyclic traversal of the source
/// passes the base joint inf_0 of the target; the induced map on H^1 is
/// multiplication by this integer.
std::int64_t degree(const StageMap& f);
/// The maps f_j that agree with f on piece j and collapse everything else to
/// the base joint (target Sigma^(1) only); degree(f) is the sum of their degrees.
std::vector<StageMap> piece_maps(const StageMap& f);

/// Action on H^1 of phi^m_n : Sigma^(mn) -> Sigma^(n).
std::int64_t h1_action(std::int64_t m, std::int64_t n);

/// Isomorphism invariant of H^1(S(Lambda, p)) = Q(p).
SupernaturalNumber h1_of_solenoid(const SequenceDescriptor& s);

/// count pairwise inequivalent descriptors: cycle [q_i] over the first primes.
std::vector<SequenceDescriptor> distinct_descriptors(std::size_t count);

}  // namespace solenoid
