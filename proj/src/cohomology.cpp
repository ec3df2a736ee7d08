#include "solenoid/cohomology.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

SequenceDescriptor SequenceDescriptor::make(std::vector<std::uint64_t> prefix,
                                            std::vector<std::uint64_t> cycle) {
  if (cycle.empty()) throw Error(ErrorCode::InvalidDescriptor, "cycle must be nonempty");
  for (const auto* part : {&prefix, &cycle})
    for (auto v : *part)
      if (v < 2) throw Error(ErrorCode::InvalidDescriptor, "sequence entries must be >= 2");
  SequenceDescriptor s;
  s.prefix_ = std::move(prefix);
  s.cycle_ = std::move(cycle);
  return s;
}

std::uint64_t SequenceDescriptor::term(std::size_t i) const {
  if (i == 0) throw Error(ErrorCode::DomainError, "sequence terms are indexed from 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return cycle_[(i - 1 - prefix_.size()) % cycle_.size()];
}

Integer SequenceDescriptor::product(std::size_t n) const {
  Integer out = 1;
  for (std::size_t i = 1; i <= n; ++i) out *= term(i);
  return out;
}

std::optional<std::uint64_t> SupernaturalNumber::multiplicity(std::uint64_t prime) const {
  if (infinite.count(prime)) return std::nullopt;
  auto it = finite.find(prime);
  return it == finite.end() ? 0 : it->second;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n / q; ++q)
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

SupernaturalNumber supernatural_of(const SequenceDescriptor& s) {
  SupernaturalNumber out;
  for (auto v : s.cycle())
    for (auto q : prime_factors(v)) out.infinite.insert(q);
  for (auto v : s.prefix())
    for (auto q : prime_factors(v))
      if (!out.infinite.count(q)) ++out.finite[q];
  return out;
}

bool mccord_equivalent(const SequenceDescriptor& a, const SequenceDescriptor& b) {
  return supernatural_of(a).infinite == supernatural_of(b).infinite;
}

bool member(const SequenceDescriptor& s, const Rational& r) {
  Integer den = boost::multiprecision::denominator(r);
  const auto inv = supernatural_of(s);
  for (auto q : inv.infinite)
    while (den % q == 0) den /= q;
  for (const auto& [q, mult] : inv.finite)
    for (std::uint64_t i = 0; i < mult && den % q == 0; ++i) den /= q;
  return den == 1;
}

DirectLimitElement canonical(const SequenceDescriptor& s, DirectLimitElement u) {
  if (u.numerator == 0) return {0, 0};
  while (u.level > 0 && u.numerator % s.term(u.level) == 0) {
    u.numerator /= s.term(u.level);
    --u.level;
  }
  return u;
}

DirectLimitElement lift(const SequenceDescriptor& s, const DirectLimitElement& u, std::size_t level) {
  if (level < u.level) throw Error(ErrorCode::DomainError, "cannot lift to an earlier level");
  DirectLimitElement out = u;
  for (; out.level < level; ++out.level) out.numerator *= s.term(out.level + 1);
  return out;
}

DirectLimitElement dl_add(const SequenceDescriptor& s, const DirectLimitElement& u,
                          const DirectLimitElement& v) {
  const std::size_t top = std::max(u.level, v.level);
  auto a = lift(s, u, top);
  a.numerator += lift(s, v, top).numerator;
  return canonical(s, std::move(a));
}

DirectLimitElement dl_negate(const SequenceDescriptor& s, const DirectLimitElement& u) {
  return canonical(s, {u.level, -u.numerator});
}

bool dl_equal(const SequenceDescriptor& s, const DirectLimitElement& u, const DirectLimitElement& v) {
  const std::size_t top = std::max(u.level, v.level);
  return lift(s, u, top).numerator == lift(s, v, top).numerator;
}

Rational dl_value(const SequenceDescriptor& s, const DirectLimitElement& u) {
  return Rational(u.numerator, s.product(u.level));
}

DirectLimitElement dl_from_rational(const SequenceDescriptor& s, const Rational& r) {
  if (!member(s, r)) throw Error(ErrorCode::DomainError, "rational is not in Q(p)");
  const Integer den = boost::multiprecision::denominator(r);
  Integer prod = 1;
  std::size_t level = 0;
  while (prod % den != 0) prod *= s.term(++level);
  return canonical(s, {level, boost::multiprecision::numerator(r) * (prod / den)});
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t piece_start(const StageMap::Piece& p, std::int64_t target) {
  return p.orientation < 0 ? mod(p.copy + 1, target) : p.copy;
}

std::int64_t piece_end(const StageMap::Piece& p, std::int64_t target) {
  return p.orientation > 0 ? mod(p.copy + 1, target) : p.copy;
}

void require_loop(const StageMap& f) {
  if (f.source < 1 || f.target < 1 || f.pieces.size() != static_cast<std::size_t>(f.source))
    throw Error(ErrorCode::DomainError, "stage map needs one piece per source copy");
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const auto& a = f.pieces[i];
    const auto& b = f.pieces[(i + 1) % f.pieces.size()];
    if (a.copy < 0 || a.copy >= f.target || a.orientation < -1 || a.orientation > 1)
      throw Error(ErrorCode::DomainError, "stage map piece out of range");
    if (piece_end(a, f.target) != piece_start(b, f.target))
      throw Error(ErrorCode::DomainError, "stage map is not continuous at a joint");
  }
}

}  // namespace

StageMap bond_stage_map(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DomainError, "bonding map needs m, n >= 1");
  StageMap f{m * n, n, {}};
  for (std::int64_t i = 0; i < m * n; ++i) f.pieces.push_back({i % n, 1});
  return f;
}

StageMap compose(const StageMap& outer, const StageMap& inner) {
  require_loop(outer);
  require_loop(inner);
  if (inner.target != outer.source)
    throw Error(ErrorCode::DomainError, "stage maps do not compose");
  StageMap out{inner.source, outer.target, {}};
  for (const auto& p : inner.pieces) {
    const auto& q = outer.pieces[static_cast<std::size_t>(p.copy)];
    if (p.orientation == 0) {
      // Collapsed onto the joint inf_copy, which lands on the start of the outer piece.
      out.pieces.push_back({piece_start(q, outer.target), 0});
    } else {
      out.pieces.push_back({q.copy, p.orientation * q.orientation});
    }
  }
  return out;
}

std::int64_t degree(const StageMap& f) {
  require_loop(f);
  std::int64_t crossings = 0;
  for (const auto& p : f.pieces)
    if (p.copy == f.target - 1) crossings += p.orientation;
  return crossings;
}

std::vector<StageMap> piece_maps(const StageMap& f) {
  require_loop(f);
  if (f.target != 1) throw Error(ErrorCode::DomainError, "piece decomposition needs target Sigma^(1)");
  std::vector<StageMap> out;
  for (std::size_t j = 0; j < f.pieces.size(); ++j) {
    StageMap g{f.source, 1, std::vector<StageMap::Piece>(f.pieces.size(), {0, 0})};
    g.pieces[j] = f.pieces[j];
    out.push_back(std::move(g));
  }
  return out;
}

std::int64_t h1_action(std::int64_t m, std::int64_t n) { return degree(bond_stage_map(m, n)); }

SupernaturalNumber h1_of_solenoid(const SequenceDescriptor& s) { return supernatural_of(s); }

std::vector<SequenceDescriptor> distinct_descriptors(std::size_t count) {
  std::vector<SequenceDescriptor> out;
  out.reserve(count);
  for (std::uint64_t q = 2; out.size() < count; ++q) {
    if (prime_factors(q).size() != 1) continue;
    // The prefix entry varies to show it never affects the class.
    const std::uint64_t pre = 2 + out.size() % 5;
    out.push_back(SequenceDescriptor::make({pre}, {q}));
  }
  return out;
}

}  // namespace solenoid
