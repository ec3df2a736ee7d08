#include "solenoid/literals.hpp"

#include <cctype>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  // "w" or the Greek letter omega.
  bool eat_omega() { return eat_word("w") || eat_word("ω"); }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural nat() {
    if (!peek_digit()) fail("expected a natural number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t integer() {
    const bool neg = eat('-');
    if (!neg) eat('+');
    const Natural v = nat();
    if (v > Natural(std::numeric_limits<std::int64_t>::max())) fail("integer out of range");
    const auto x = static_cast<std::int64_t>(v);
    return neg ? -x : x;
  }

  // A natural number immediately followed by '/' starts a fraction.
  bool at_fraction() {
    if (!peek_digit()) return false;
    std::size_t p = pos_;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '/';
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, msg + " at offset " + std::to_string(pos_), pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

CnfOrdinal ordinal_sum(Cursor& c, bool stop_at_fraction);

CnfOrdinal exponent(Cursor& c) {
  if (c.eat('(')) {
    auto e = ordinal_sum(c, false);
    c.expect(')');
    return e;
  }
  if (c.eat_omega()) {
    if (c.eat('^')) return CnfOrdinal::monomial(exponent(c), 1);
    return CnfOrdinal::omega();
  }
  return CnfOrdinal::natural(c.nat());
}

CnfOrdinal term(Cursor& c) {
  if (c.peek() == 'w' && std::isdigit(static_cast<unsigned char>(c.peek_raw(1))))
    c.fail("'w1' is only allowed as the leading block of a long-line point");
  if (c.eat_omega()) {
    CnfOrdinal e = CnfOrdinal::natural(1);
    if (c.eat('^')) e = exponent(c);
    Natural coeff = 1;
    if (c.eat('*')) coeff = c.nat();
    return CnfOrdinal::monomial(e, coeff);
  }
  if (c.peek_digit()) return CnfOrdinal::natural(c.nat());
  c.fail("expected an ordinal term");
}

CnfOrdinal ordinal_sum(Cursor& c, bool stop_at_fraction) {
  CnfOrdinal out = term(c);
  for (;;) {
    const std::size_t before = c.pos();
    if (!c.eat('+')) break;
    if (stop_at_fraction && c.at_fraction()) {
      c.reset(before);
      break;
    }
    out = add(out, term(c));
  }
  return out;
}

Rational fraction(Cursor& c) {
  const Natural n = c.nat();
  c.expect('/');
  const std::size_t at = c.pos();
  const Natural d = c.nat();
  if (d == 0) throw Error(ErrorCode::Syntax, "zero denominator", at);
  Rational t(n, d);
  if (t >= 1) throw Error(ErrorCode::Syntax, "fraction must lie in [0, 1)", at);
  return t;
}

// rho + t where either part may be absent.
BasePart remainder_and_fraction(Cursor& c) {
  BasePart out;
  if (c.at_fraction()) {
    out.fraction = fraction(c);
    return out;
  }
  out.remainder = ordinal_sum(c, true);
  if (c.eat('+')) out.fraction = fraction(c);
  return out;
}

bool starts_part(Cursor& c) {
  const char ch = c.peek();
  return ch == 'w' || std::isdigit(static_cast<unsigned char>(ch)) || ch == '\xcf';
}

LongPoint long_point(Cursor& c) {
  if (c.eat_word("max")) return LongPoint::end_max();
  CnfOrdinal blocks;
  bool any = false;
  if (c.peek() == 'w' && c.peek_raw(1) == '1' && !std::isdigit(static_cast<unsigned char>(c.peek_raw(2)))) {
    const std::size_t block_at = c.pos();
    c.eat_word("w1");
    any = true;
    blocks = CnfOrdinal::natural(1);
    if (c.eat('*')) {
      if (c.eat('(')) {
        blocks = ordinal_sum(c, false);
        c.expect(')');
      } else {
        blocks = CnfOrdinal::natural(c.nat());
      }
    }
    if (!c.eat('+')) {
      try {
        return LongPoint::make(blocks, {}, 0);
      } catch (const Error& e) {
        throw Error(ErrorCode::Syntax, e.what(), block_at);
      }
    }
  }
  if (!starts_part(c)) {
    if (any) c.fail("expected a countable ordinal or fraction after '+'");
    c.fail("expected a long-line point");
  }
  const std::size_t at = c.pos();
  BasePart rest = remainder_and_fraction(c);
  try {
    return LongPoint::make(std::move(blocks), std::move(rest.remainder), std::move(rest.fraction));
  } catch (const Error& e) {
    throw Error(ErrorCode::Syntax, e.what(), at);
  }
}

TowerPoint tower_point(Cursor& c, int kappa) {
  if (c.eat_word("inf")) return TowerPoint::joint(kappa);
  c.expect('[');
  std::vector<std::int64_t> ints;
  if (c.peek() != ';' && c.peek() != ']') {
    ints.push_back(c.integer());
    while (c.eat(',')) ints.push_back(c.integer());
  }
  const std::size_t at = c.pos();
  try {
    if (c.eat(';')) {
      BasePart part = remainder_and_fraction(c);
      c.expect(']');
      return TowerPoint::base(kappa, std::move(ints), std::move(part));
    }
    c.expect(']');
    return TowerPoint::int_stop(kappa, std::move(ints));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Syntax) throw;
    throw Error(ErrorCode::Syntax, e.what(), at);
  }
}

CopyPoint copy_point(Cursor& c, const StageMode& mode) {
  if (mode.kind == StageMode::Kind::Tower) return tower_point(c, mode.kappa);
  return long_point(c);
}

StagePoint stage_point(Cursor& c, std::int64_t stage, const StageMode& mode) {
  if (c.eat_word("inf")) {
    const std::int64_t i = c.integer();
    return StagePoint::joint(stage, i);
  }
  c.expect('(');
  const std::int64_t i = c.integer();
  c.expect('|');
  const std::size_t at = c.pos();
  CopyPoint x = copy_point(c, mode);
  c.expect(')');
  try {
    return StagePoint::inner(stage, i, std::move(x));
  } catch (const Error& e) {
    throw Error(ErrorCode::Syntax, e.what(), at);
  }
}

template <typename F>
auto parse_all(std::string_view text, F&& f) {
  Cursor c(text);
  auto out = f(c);
  c.finish();
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string base_text(const BasePart& b) {
  std::vector<std::string> parts;
  if (!b.remainder.is_zero()) parts.push_back(to_string(b.remainder));
  if (b.fraction != 0) parts.push_back(to_string(b.fraction));
  return join(parts, " + ");
}

}  // namespace

CnfOrdinal parse_ordinal(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return ordinal_sum(c, false); });
}

LongPoint parse_long_point(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return long_point(c); });
}

std::string to_string(const LongPoint& x) {
  if (x.is_end_max()) return "max";
  std::vector<std::string> parts;
  if (!x.blocks().is_zero())
    parts.push_back(x.blocks() == CnfOrdinal::natural(1) ? "w1" : "w1*(" + to_string(x.blocks()) + ")");
  if (!x.remainder().is_zero()) parts.push_back(to_string(x.remainder()));
  if (x.fraction() != 0) parts.push_back(to_string(x.fraction()));
  return parts.empty() ? "0" : join(parts, " + ");
}

TowerPoint parse_tower_point(std::string_view text, int kappa) {
  return parse_all(text, [kappa](Cursor& c) { return tower_point(c, kappa); });
}

std::string to_string(const TowerPoint& x) {
  if (x.is_joint()) return "inf";
  std::vector<std::string> ints;
  for (auto z : x.ints()) ints.push_back(std::to_string(z));
  std::string out = "[" + join(ints, ",");
  if (x.is_base()) out += "; " + base_text(*x.base_part());
  return out + "]";
}

CopyPoint parse_copy_point(std::string_view text, const StageMode& mode) {
  return parse_all(text, [&mode](Cursor& c) { return copy_point(c, mode); });
}

std::string to_string(const CopyPoint& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

StagePoint parse_stage_point(std::string_view text, std::int64_t stage, const StageMode& mode) {
  return parse_all(text, [&](Cursor& c) { return stage_point(c, stage, mode); });
}

std::string to_string(const StagePoint& x) {
  if (x.is_joint()) return "inf" + std::to_string(x.index());
  return "(" + std::to_string(x.index()) + "| " + to_string(*x.within()) + ")";
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

Thread parse_thread(std::string_view points, const std::vector<std::int64_t>& p, const StageMode& mode) {
  const auto parts = split_top_level(points, ';');
  if (parts.size() != p.size() + 1)
    throw Error(ErrorCode::ThreadMismatch, "thread has " + std::to_string(parts.size()) +
                                               " levels but " + std::to_string(p.size()) +
                                               " bonding exponents");
  const auto k = stage_sizes(p, parts.size());
  std::vector<StagePoint> pts;
  for (std::size_t n = 0; n < parts.size(); ++n) pts.push_back(parse_stage_point(parts[n], k[n], mode));
  return Thread::make(mode, p, std::move(pts));
}

std::vector<std::string> to_strings(const Thread& t) {
  std::vector<std::string> out;
  for (const auto& x : t.points()) out.push_back(to_string(x));
  return out;
}

Arc parse_arc(std::string_view text, std::int64_t stage, const StageMode& mode) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw Error(ErrorCode::Syntax, "arc needs 'START .. END'", 0);
  auto a = parse_stage_point(text.substr(0, dots), stage, mode);
  auto b = parse_stage_point(text.substr(dots + 2), stage, mode);
  return Arc::make(std::move(a), std::move(b));
}

std::string to_string(const Arc& a) { return to_string(a.start) + " .. " + to_string(a.end); }

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  return parse_all(text, [](Cursor& c) {
    std::vector<std::int64_t> out;
    if (c.at_end()) return out;
    out.push_back(c.integer());
    while (c.eat(',')) out.push_back(c.integer());
    return out;
  });
}

SequenceDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::Syntax, "descriptor needs 'PREFIX:CYCLE'", 0);
  auto to_u = [](const std::vector<std::int64_t>& v) {
    std::vector<std::uint64_t> out;
    for (auto x : v) {
      if (x < 2) throw Error(ErrorCode::InvalidDescriptor, "sequence entries must be >= 2");
      out.push_back(static_cast<std::uint64_t>(x));
    }
    return out;
  };
  return SequenceDescriptor::make(to_u(parse_int_list(text.substr(0, colon))),
                                  to_u(parse_int_list(text.substr(colon + 1))));
}

std::string to_string(const SequenceDescriptor& s) {
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(std::to_string(x));
    return join(parts, ",");
  };
  return list(s.prefix()) + ":" + list(s.cycle());
}

Rational parse_rational(std::string_view text) {
  return parse_all(text, [](Cursor& c) {
    const bool neg = c.eat('-');
    const Natural n = c.nat();
    Natural d = 1;
    if (c.eat('/')) {
      const std::size_t at = c.pos();
      d = c.nat();
      if (d == 0) throw Error(ErrorCode::Syntax, "zero denominator", at);
    }
    Rational r(n, d);
    return neg ? Rational(-r) : r;
  });
}

std::string to_string(const Rational& r) {
  const auto& d = boost::multiprecision::denominator(r);
  if (d == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + d.str();
}

DirectLimitElement parse_dl_element(std::string_view text) {
  return parse_all(text, [](Cursor& c) {
    const bool neg = c.eat('-');
    Integer num = c.nat();
    c.expect('@');
    const Natural level = c.nat();
    if (level > 1'000'000) c.fail("level out of range");
    return DirectLimitElement{static_cast<std::size_t>(level), neg ? Integer(-num) : num};
  });
}

std::string to_string(const DirectLimitElement& u) {
  return u.numerator.str() + "@" + std::to_string(u.level);
}

StageMode parse_mode(std::string_view text) {
  if (text == "long") return StageMode::long_line();
  if (text.substr(0, 6) == "tower:") {
    const auto k = parse_int_list(text.substr(6));
    if (k.size() == 1 && k[0] >= 1 && k[0] <= 1'000'000) return StageMode::tower(static_cast<int>(k[0]));
  }
  throw Error(ErrorCode::Syntax, "mode must be 'long' or 'tower:K'", 0);
}

std::string to_string(const StageMode& mode) {
  if (mode.kind == StageMode::Kind::LongLine) return "long";
  return "tower:" + std::to_string(mode.kappa);
}

}  // namespace solenoid
