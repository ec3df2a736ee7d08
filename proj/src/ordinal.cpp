#include "solenoid/ordinal.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

CnfOrdinal CnfOrdinal::natural(const Natural& n) {
  CnfOrdinal out;
  if (n < 0) throw Error(ErrorCode::InvalidPoint, "ordinal coefficient must be non-negative");
  if (n != 0) out.terms_.push_back(CnfTerm{CnfOrdinal{}, n});
  return out;
}

CnfOrdinal CnfOrdinal::omega() { return monomial(natural(1), 1); }

CnfOrdinal CnfOrdinal::monomial(const CnfOrdinal& exponent, const Natural& coefficient) {
  CnfOrdinal out;
  if (coefficient < 0) throw Error(ErrorCode::InvalidPoint, "ordinal coefficient must be non-negative");
  if (coefficient != 0) out.terms_.push_back(CnfTerm{exponent, coefficient});
  return out;
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw Error(ErrorCode::InvalidPoint, "CNF coefficients must be >= 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw Error(ErrorCode::InvalidPoint, "CNF exponents must be strictly decreasing");
  }
  CnfOrdinal out;
  out.terms_ = std::move(terms);
  return out;
}

CnfOrdinal CnfOrdinal::trusted(std::vector<CnfTerm> terms) {
  CnfOrdinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool CnfOrdinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::optional<Natural> CnfOrdinal::finite_value() const {
  if (terms_.empty()) return Natural{0};
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

bool CnfOrdinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool CnfOrdinal::is_limit() const { return !terms_.empty() && !is_successor(); }

bool CnfOrdinal::below_omega_pow_omega() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const CnfTerm& t) { return t.exponent.is_finite(); });
}

std::size_t CnfOrdinal::depth() const {
  std::size_t deepest = 0;
  for (const auto& t : terms_) deepest = std::max(deepest, t.exponent.depth());
  return terms_.empty() ? 0 : deepest + 1;
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
  const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = ta.exponent <=> tb.exponent; c != 0) return c;
    if (ta.coefficient != tb.coefficient)
      return ta.coefficient < tb.coefficient ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const CnfOrdinal& a, const CnfOrdinal& b) { return a <=> b; }

CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const auto& head = b.terms().front();
  std::vector<CnfTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t rest = 0;
  for (const auto& t : a.terms()) {
    const auto c = t.exponent <=> head.exponent;
    if (c > 0) {
      out.push_back(t);
      continue;
    }
    if (c == 0) {
      out.push_back(CnfTerm{head.exponent, t.coefficient + head.coefficient});
      rest = 1;
    }
    break;
  }
  out.insert(out.end(), b.terms().begin() + static_cast<std::ptrdiff_t>(rest), b.terms().end());
  return CnfOrdinal::trusted(std::move(out));
}

CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& lead = a.terms().front();
  // a * (sum of terms of b) distributes on the left. A term w^f * c with f >= 1
  // gives w^(e1 + f) * c; a finite last term c scales the leading coefficient
  // of a. The pieces come out with strictly decreasing exponents, so they
  // concatenate without further normalization.
  std::vector<CnfTerm> out;
  out.reserve(b.terms().size() + a.terms().size());
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      out.push_back(CnfTerm{lead.exponent, lead.coefficient * t.coefficient});
      out.insert(out.end(), a.terms().begin() + 1, a.terms().end());
    } else {
      out.push_back(CnfTerm{add(lead.exponent, t.exponent), t.coefficient});
    }
  }
  return CnfOrdinal::trusted(std::move(out));
}

CnfOrdinal omega_pow(const CnfOrdinal& a, std::size_t depth_bound) {
  CnfOrdinal out = CnfOrdinal::monomial(a, 1);
  if (out.depth() > depth_bound)
    throw Error(ErrorCode::RepresentationOverflow,
                "w^a nests " + std::to_string(out.depth()) + " levels, bound is " +
                    std::to_string(depth_bound));
  return out;
}

namespace {

std::string exponent_text(const CnfOrdinal& e) {
  if (e.is_finite()) return e.finite_value()->str();
  const auto& ts = e.terms();
  if (ts.size() == 1 && ts[0].coefficient == 1) return to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += "w";
    if (t.exponent != CnfOrdinal::natural(1)) out += "^" + exponent_text(t.exponent);
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

}  // namespace solenoid
