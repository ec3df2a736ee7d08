#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace solenoid {

using Natural = boost::multiprecision::cpp_int;

/// Nesting bound applied by omega_pow unless the caller asks otherwise.
inline constexpr std::size_t kDefaultOrdinalDepthBound = 16;

struct CnfTerm;

/**
 * An ordinal below epsilon_0 held in Cantor normal form
 *
 *   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1.
 *
 * Zero is the empty term list. The representation is unique, so structural
 * equality is ordinal equality. Values are immutable once built.
 */
class CnfOrdinal {
 public:
  CnfOrdinal() = default;

  static CnfOrdinal natural(const Natural& n);
  static CnfOrdinal omega();
  /// Single term w^exponent * coefficient (zero when coefficient is 0).
  static CnfOrdinal monomial(const CnfOrdinal& exponent, const Natural& coefficient);
  /// Accepts terms already in normal form; throws InvalidPoint otherwise.
  static CnfOrdinal from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  /// The natural number this ordinal equals, if it is finite.
  std::optional<Natural> finite_value() const;
  bool is_successor() const;
  bool is_limit() const;
  /// True when every exponent is itself finite, i.e. the ordinal is below w^w.
  bool below_omega_pow_omega() const;
  /// Nesting depth: 0 for zero, else 1 + the largest exponent depth.
  std::size_t depth() const;

  friend bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);
  friend std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b);
  friend CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b);
  friend CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b);

 private:
  // For terms that are normal by construction.
  static CnfOrdinal trusted(std::vector<CnfTerm> terms);

  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  CnfOrdinal exponent;
  Natural coefficient;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

std::strong_ordering compare(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b);
/// w^a; throws RepresentationOverflow when the result nests deeper than depth_bound.
CnfOrdinal omega_pow(const CnfOrdinal& a,
                     std::size_t depth_bound = kDefaultOrdinalDepthBound);

inline CnfOrdinal operator+(const CnfOrdinal& a, const CnfOrdinal& b) { return add(a, b); }
inline CnfOrdinal operator*(const CnfOrdinal& a, const CnfOrdinal& b) { return mul(a, b); }

/// Canonical text form, e.g. "w^2*3 + w + 5"; parse_ordinal inverts it.
std::string to_string(const CnfOrdinal& a);

}  // namespace solenoid
