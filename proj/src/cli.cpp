#include "solenoid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "solenoid/arcs.hpp"
#include "solenoid/cohomology.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/long_line.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

using nlohmann::json;

namespace {

std::string domain_name(IntervalAutToken::Domain d) {
  switch (d) {
    case IntervalAutToken::Domain::Any: return "any";
    case IntervalAutToken::Domain::LongLine: return "long-line";
    case IntervalAutToken::Domain::MetricArc: return "metric-arc";
    case IntervalAutToken::Domain::TowerLevel: return "tower-level";
  }
  return "any";
}

template <typename T>
json opt_text(const std::optional<T>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Syntax, std::string("recipe JSON lacks '") + key + "'");
  return j.at(key);
}

std::string text_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::Syntax, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::Syntax, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

json ordering_name(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

json supernatural_json(const SupernaturalNumber& s) {
  json finite = json::object();
  for (const auto& [p, m] : s.finite) finite[std::to_string(p)] = m;
  json infinite = json::array();
  for (auto p : s.infinite) infinite.push_back(p);
  return {{"finite", finite}, {"infinite", infinite}};
}

json strings(const std::vector<StagePoint>& pts) {
  json out = json::array();
  for (const auto& x : pts) out.push_back(to_string(x));
  return out;
}

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const auto& a : arcs) out.push_back(to_string(a));
  return out;
}

json dl_json(const SequenceDescriptor& s, const DirectLimitElement& u) {
  return {{"element", to_string(u)}, {"value", to_string(dl_value(s, u))}};
}

std::int64_t checked_size(std::int64_t v, const char* what) {
  if (v < 1) throw Error(ErrorCode::DomainError, std::string(what) + " must be positive");
  return v;
}

void check_bounds(const std::vector<std::int64_t>& p, std::size_t depth, const Limits& lim) {
  if (depth > lim.max_depth)
    throw Error(ErrorCode::BoundExceeded, "depth " + std::to_string(depth) + " exceeds the bound " +
                                              std::to_string(lim.max_depth));
  for (auto k : stage_sizes(p, depth))
    if (k > lim.index_bound)
      throw Error(ErrorCode::BoundExceeded, "stage size " + std::to_string(k) +
                                                " exceeds the index bound " +
                                                std::to_string(lim.index_bound));
}

// Flags shared by every command that reads points.
struct ModeFlags {
  int tower = 0;
  bool long_line = false;

  void attach(CLI::App* app) {
    auto* t = app->add_option("--tower", tower, "points of the tower level K")->check(CLI::PositiveNumber);
    auto* l = app->add_flag("--long", long_line, "points of the long line (default)");
    t->excludes(l);
  }
  StageMode mode() const { return tower > 0 ? StageMode::tower(tower) : StageMode::long_line(); }
};

struct Args {
  std::string a, b, x, y, point, points, recipe, c_arc, g_arc, arcs, s, r, u, v, p;
  std::int64_t m = 0, n = 0, k = 0, pn = 0, stage = 0, level = 0, pullback = 0;
  std::size_t levels = 0, count = 0, bound = kDefaultOrdinalDepthBound;
  std::int64_t address_bound = kDefaultAddressBound;
  ModeFlags mode;
};

}  // namespace

Limits limits_from_env() {
  Limits lim;
  auto read = [](const char* name, auto& slot) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    std::vector<std::int64_t> parsed;
    try {
      parsed = parse_int_list(v);
    } catch (const Error&) {
    }
    if (parsed.size() != 1 || parsed[0] < 1)
      throw Error(ErrorCode::Usage, std::string(name) + " must be a positive integer");
    slot = static_cast<std::remove_reference_t<decltype(slot)>>(parsed[0]);
  };
  read("SOLENOID_MAX_DEPTH", lim.max_depth);
  read("SOLENOID_INDEX_BOUND", lim.index_bound);
  return lim;
}

json to_json(const IntervalAutToken& t) {
  return {{"mode", t.is_identity() ? "identity" : "mapping"},
          {"domain", domain_name(t.domain())},
          {"kappa", t.kappa()},
          {"source", opt_text(t.source())},
          {"target", opt_text(t.target())},
          {"lower", opt_text(t.lower())},
          {"upper", opt_text(t.upper())},
          {"translation", t.translation()}};
}

IntervalAutToken token_from_json(const json& j) {
  const std::string domain = text_field(j, "domain");
  const std::int64_t translation = j.contains("translation") ? int_field(j, "translation") : 0;
  IntervalAutToken t = IntervalAutToken::identity();
  if (domain == "any") {
    t = IntervalAutToken::identity().with_translation(translation);
  } else if (domain == "long-line") {
    t = IntervalAutToken::long_line_interval(
        parse_long_point(text_field(j, "source")), parse_long_point(text_field(j, "target")),
        parse_long_point(text_field(j, "lower")), parse_long_point(text_field(j, "upper")));
  } else if (domain == "metric-arc") {
    t = IntervalAutToken::metric_arc(parse_tower_point(text_field(j, "source"), 1),
                                     parse_tower_point(text_field(j, "target"), 1));
  } else if (domain == "tower-level") {
    const auto kappa = int_field(j, "kappa");
    if (kappa < 2 || kappa > 1'000'000) throw Error(ErrorCode::Syntax, "tower token needs kappa >= 2");
    const int lower = static_cast<int>(kappa) - 1;
    t = IntervalAutToken::tower_level(static_cast<int>(kappa),
                                      parse_tower_point(text_field(j, "source"), lower),
                                      parse_tower_point(text_field(j, "target"), lower), translation);
  } else {
    throw Error(ErrorCode::Syntax, "unknown token domain '" + domain + "'");
  }
  // Derived fields must agree with what was written down.
  const json back = to_json(t);
  for (const char* key : {"mode", "lower", "upper"})
    if (j.contains(key) && j.at(key) != back.at(key))
      throw Error(ErrorCode::Syntax, std::string("token field '") + key + "' is inconsistent");
  return t;
}

json to_json(const HomeoRecipe& r) {
  json levels = json::array();
  for (std::size_t i = 0; i < r.levels().size(); ++i) {
    const auto& l = r.levels()[i];
    levels.push_back({{"level", i + 1}, {"rot", l.rot}, {"trans", l.trans}, {"hat", to_json(l.hat)}});
  }
  return {{"mode", to_string(r.mode())}, {"p", r.p()}, {"levels", levels}};
}

HomeoRecipe recipe_from_json(const json& j) {
  const StageMode mode = parse_mode(text_field(j, "mode"));
  const auto& pj = field(j, "p");
  if (!pj.is_array()) throw Error(ErrorCode::Syntax, "'p' must be an array");
  std::vector<std::int64_t> p;
  for (const auto& e : pj) {
    if (!e.is_number_integer()) throw Error(ErrorCode::Syntax, "'p' entries must be integers");
    p.push_back(e.get<std::int64_t>());
  }
  const auto& lj = field(j, "levels");
  if (!lj.is_array()) throw Error(ErrorCode::Syntax, "'levels' must be an array");
  std::vector<RecipeLevel> levels;
  for (std::size_t i = 0; i < lj.size(); ++i) {
    const auto& e = lj[i];
    if (e.contains("level") && int_field(e, "level") != static_cast<std::int64_t>(i + 1))
      throw Error(ErrorCode::Syntax, "recipe levels must be listed in order from 1");
    levels.push_back({int_field(e, "rot"), int_field(e, "trans"), token_from_json(field(e, "hat"))});
  }
  return HomeoRecipe::make(mode, std::move(p), std::move(levels));
}

namespace {

HomeoRecipe read_recipe(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("recipe is not valid JSON: ") + e.what(), e.byte);
  }
  return recipe_from_json(j);
}

json run_ordinal(const std::string& op, const Args& a) {
  const CnfOrdinal x = parse_ordinal(a.a);
  if (op == "pow") return {{"result", to_string(omega_pow(x, a.bound))}};
  const CnfOrdinal y = parse_ordinal(a.b);
  if (op == "compare") return {{"ordering", ordering_name(compare(x, y))}};
  if (op == "add") return {{"result", to_string(add(x, y))}};
  return {{"result", to_string(mul(x, y))}};
}

json run_classify(const Args& a) {
  const StageMode mode = a.mode.mode();
  if (mode.kind == StageMode::Kind::Tower) {
    const TowerPoint x = parse_tower_point(a.point, mode.kappa);
    return {{"kappa", mode.kappa}, {"point", to_string(x)}, {"type", point_type(x)}};
  }
  const LongPoint x = parse_long_point(a.point);
  json out = {{"point", to_string(x)}, {"ng", is_ng(x)}, {"ng_closure", in_ng_closure(x)}};
  if (x.is_zero()) {
    out["class"] = nullptr;
  } else {
    const auto label = partition_class(x);
    out["class"] = {{"kind", label.kind == OrbitClassLabel::Kind::Ng ? "ng" : "interval"},
                    {"gamma", to_string(label.gamma)}};
  }
  out["omega1_power_exponent"] = opt_text(omega1_power_exponent(x));
  return out;
}

json run_pair(const Args& a) {
  const StageMode mode = a.mode.mode();
  if (mode.kind == StageMode::Kind::Tower) {
    const TowerPoint x = parse_tower_point(a.x, mode.kappa);
    const TowerPoint y = parse_tower_point(a.y, mode.kappa);
    const bool same = same_orbit(x, y);
    json token = nullptr;
    if (same && !x.is_joint()) token = to_json(base_automorphism_token(x, y));
    return {{"same_orbit", same}, {"token", token}};
  }
  const LongPoint x = parse_long_point(a.x);
  const LongPoint y = parse_long_point(a.y);
  json out = {{"distinct",
               distinct_orbit_proof(x, y) == ProofStatus::ProvenDistinct ? "ProvenDistinct" : "NotProven"}};
  if (x.is_zero() || y.is_zero()) {
    out["status"] = x == y ? "Same" : "Unknown";
    out["token"] = x == y ? to_json(IntervalAutToken::identity()) : json(nullptr);
    return out;
  }
  const auto rs = same_orbit_recipe(x, y);
  out["status"] = rs.status == OrbitRecipeStatus::Status::Same ? "Same" : "Unknown";
  out["token"] = rs.token ? to_json(*rs.token) : json(nullptr);
  return out;
}

json run_orbit(const Args& a, const Limits& lim) {
  const auto p = parse_int_list(a.p);
  const Thread x = parse_thread(a.x, p, a.mode.mode());
  const Thread y = parse_thread(a.y, p, a.mode.mode());
  check_bounds(p, x.depth(), lim);
  const auto rs = synthesize_recipe(x, y);
  const char* status = rs.kind == RecipeStatus::Kind::Recipe           ? "Same"
                       : rs.kind == RecipeStatus::Kind::ProvenDistinct ? "ProvenDistinct"
                                                                        : "Unknown";
  return {{"status", status}, {"recipe", rs.recipe ? to_json(*rs.recipe) : json(nullptr)}};
}

json run_fiber(const Args& a, const Limits& lim) {
  const std::int64_t m = checked_size(a.m, "--m"), n = checked_size(a.n, "--n");
  if (m > lim.index_bound || n > lim.index_bound || m * n > lim.index_bound)
    throw Error(ErrorCode::BoundExceeded, "stage size exceeds the index bound");
  return {{"points", strings(fiber(m, n, parse_stage_point(a.point, n, a.mode.mode())))}};
}

json run_stage(const std::string& op, const Args& a, const Limits& lim) {
  const std::int64_t n = checked_size(a.n, "--n");
  if (op == "bond") {
    const std::int64_t m = checked_size(a.m, "--m");
    if (m > lim.index_bound || n > lim.index_bound || m * n > lim.index_bound)
      throw Error(ErrorCode::BoundExceeded, "stage size exceeds the index bound");
    return {{"point", to_string(apply_bond(m, n, parse_stage_point(a.point, m * n, a.mode.mode())))}};
  }
  const StagePoint x = parse_stage_point(a.point, n, a.mode.mode());
  if (op == "rotate") return {{"point", to_string(rotate(a.k, x))}};
  return {{"point", to_string(translate(a.k, x))}};
}

json run_thread(const std::string& op, const Args& a, const Limits& lim) {
  if (op == "commute") {
    const HomeoRecipe r = read_recipe(a.recipe);
    check_bounds(r.p(), r.depth(), lim);
    const auto rep = verify_commutes(r, r.depth(), a.address_bound);
    json ce = nullptr;
    if (rep.counterexample)
      ce = {{"level", rep.counterexample->level},
            {"point", to_string(rep.counterexample->point)},
            {"via_upper", to_string(rep.counterexample->via_upper)},
            {"via_lower", to_string(rep.counterexample->via_lower)}};
    return {{"commutes", rep.ok}, {"checked", rep.checked}, {"counterexample", ce}};
  }
  if (op == "apply") {
    const HomeoRecipe r = read_recipe(a.recipe);
    const Thread t = parse_thread(a.points, r.p(), r.mode());
    check_bounds(r.p(), t.depth(), lim);
    return {{"thread", to_strings(apply_recipe(r, t))}};
  }
  const auto p = parse_int_list(a.p);
  if (op == "verify") {
    const auto parts = split_top_level(a.points, ';');
    const std::size_t depth = parts.size();
    const Thread t = parse_thread(a.points, std::vector<std::int64_t>(p.begin(), p.begin() + std::min(p.size(), depth - 1)),
                                  a.mode.mode());
    check_bounds(t.p(), t.depth(), lim);
    return {{"valid", true}, {"depth", t.depth()}, {"stage_sizes", stage_sizes(t.p(), t.depth())},
            {"thread", to_strings(t)}};
  }
  // extend
  const std::size_t depth = split_top_level(a.points, ';').size();
  if (p.size() < depth - 1) throw Error(ErrorCode::ThreadMismatch, "--p is shorter than the thread");
  const Thread t = parse_thread(a.points, std::vector<std::int64_t>(p.begin(), p.begin() + depth - 1),
                                a.mode.mode());
  check_bounds(p, depth + a.levels, lim);
  json threads = json::array();
  for (const auto& e : extend_thread(t, p, a.levels)) threads.push_back(to_strings(e));
  return {{"count", threads.size()}, {"threads", threads}};
}

std::vector<Arc> parse_arcs(const std::string& text, std::int64_t stage, const StageMode& mode) {
  std::vector<Arc> out;
  for (const auto& part : split_top_level(text, ';')) out.push_back(parse_arc(part, stage, mode));
  return out;
}

json run_indecomp(const Args& a, const Limits& lim) {
  const std::int64_t stage = checked_size(a.stage, "--stage");
  const std::int64_t pn = a.pn;
  if (stage > lim.index_bound || (pn > 0 && stage * pn > lim.index_bound))
    throw Error(ErrorCode::BoundExceeded, "stage size exceeds the index bound");
  const auto rep = indecomposability_witness(pn, parse_arc(a.c_arc, stage, a.mode.mode()),
                                             parse_arc(a.g_arc, stage, a.mode.mode()));
  json gaps = json::array();
  for (const auto& g : rep.pair_gaps)
    gaps.push_back({{"c", g.c_component}, {"g", g.g_component},
                    {"gap", to_string(g.gap.from) + " .. " + to_string(g.gap.to)}});
  return {{"p_n", rep.p_n},
          {"stage", rep.stage},
          {"lifted_stage", rep.lifted_stage},
          {"c_components", arcs_json(rep.c_components)},
          {"g_components", arcs_json(rep.g_components)},
          {"components_disjoint", rep.components_disjoint},
          {"components_missed_by_connected_lift", rep.components_missed_by_connected_lift},
          {"pair_gaps", gaps},
          {"lifts_never_cover", rep.lifts_never_cover}};
}

json run_chain(const Args& a, const Limits& lim) {
  const std::int64_t stage = checked_size(a.stage, "--stage");
  if (stage > lim.index_bound) throw Error(ErrorCode::BoundExceeded, "stage size exceeds the index bound");
  auto cover = parse_arcs(a.arcs, stage, a.mode.mode());
  json out = json::object();
  if (a.pullback > 0) {
    if (stage * a.pullback > lim.index_bound)
      throw Error(ErrorCode::BoundExceeded, "stage size exceeds the index bound");
    cover = pull_back_cover(a.pullback, cover);
    out["components"] = arcs_json(cover);
  }
  out["circular_chain"] = circular_chain_check(cover);
  return out;
}

json run_cohomology(const std::string& op, const Args& a) {
  if (op == "degree") return {{"degree", h1_action(checked_size(a.m, "--m"), checked_size(a.n, "--n"))}};
  if (op == "distinct") {
    if (a.count > 1000) throw Error(ErrorCode::BoundExceeded, "--count is limited to 1000");
    const auto ds = distinct_descriptors(a.count);
    std::vector<std::set<std::uint64_t>> inv;
    for (const auto& d : ds) inv.push_back(h1_of_solenoid(d).infinite);
    bool pairwise = true;
    for (std::size_t i = 0; i < inv.size() && pairwise; ++i)
      for (std::size_t j = i + 1; j < inv.size(); ++j)
        if (inv[i] == inv[j]) {
          pairwise = false;
          break;
        }
    json list = json::array();
    for (const auto& d : ds) list.push_back(to_string(d));
    return {{"descriptors", list}, {"pairwise_inequivalent", pairwise}};
  }
  if (op == "equiv")
    return {{"equivalent", mccord_equivalent(parse_descriptor(a.a), parse_descriptor(a.b))}};
  const SequenceDescriptor s = parse_descriptor(a.s);
  if (op == "invariant") return {{"descriptor", to_string(s)}, {"invariant", supernatural_json(h1_of_solenoid(s))}};
  if (op == "member") {
    const Rational r = parse_rational(a.r);
    json out = {{"member", member(s, r)}};
    out["element"] = out["member"].get<bool>() ? json(to_string(dl_from_rational(s, r))) : json(nullptr);
    return out;
  }
  const DirectLimitElement u = parse_dl_element(a.u);
  if (op == "dl-neg") return dl_json(s, canonical(s, dl_negate(s, u)));
  const DirectLimitElement v = parse_dl_element(a.v);
  if (op == "dl-add") return dl_json(s, canonical(s, dl_add(s, u, v)));
  return {{"equal", dl_equal(s, u, v)}};
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

json error_json(ErrorCode code, const std::string& message, std::optional<std::size_t> position) {
  json e = {{"code", std::string(to_string(code))}, {"message", message}};
  if (position) e["position"] = *position;
  return {{"error", e}};
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations on long solenoids", "solenoid"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  Args a;
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* ord = app.add_subcommand("ordinal", "Cantor normal form arithmetic");
  ord->require_subcommand(1);
  for (const char* op : {"compare", "add", "mul"}) {
    auto* s = ord->add_subcommand(op);
    s->add_option("--a", a.a)->required();
    s->add_option("--b", a.b)->required();
  }
  {
    auto* s = ord->add_subcommand("pow", "w^a");
    s->add_option("--a", a.a)->required();
    s->add_option("--depth-bound", a.bound);
  }

  auto* classify = app.add_subcommand("classify", "type of a tower point or class of a long-line point");
  classify->add_option("--point", a.point)->required();
  a.mode.attach(classify);

  auto* pair = app.add_subcommand("pair", "orbit relation of two within-copy points");
  pair->add_option("--x", a.x)->required();
  pair->add_option("--y", a.y)->required();
  a.mode.attach(pair);

  auto* orbit = app.add_subcommand("orbit", "homeomorphism recipe between two threads");
  orbit->add_option("--p", a.p)->required();
  orbit->add_option("--x", a.x)->required();
  orbit->add_option("--y", a.y)->required();
  a.mode.attach(orbit);

  auto* fib = app.add_subcommand("fiber", "preimages under a bonding map");
  fib->add_option("--m", a.m)->required();
  fib->add_option("--n", a.n)->required();
  fib->add_option("--point", a.point)->required();
  a.mode.attach(fib);

  auto* stage = app.add_subcommand("stage", "maps of a single stage");
  stage->require_subcommand(1);
  {
    auto* s = stage->add_subcommand("bond", "apply phi^m_n to a point of Sigma^(mn)");
    s->add_option("--m", a.m)->required();
    s->add_option("--n", a.n)->required();
    s->add_option("--point", a.point)->required();
    a.mode.attach(s);
    for (const char* op : {"rotate", "translate"}) {
      auto* t = stage->add_subcommand(op);
      t->add_option("--k", a.k)->required();
      t->add_option("--n", a.n)->required();
      t->add_option("--point", a.point)->required();
      a.mode.attach(t);
    }
  }

  auto* thread = app.add_subcommand("thread", "finite threads and recipes");
  thread->require_subcommand(1);
  {
    auto* s = thread->add_subcommand("verify", "check a thread against the bonding maps");
    s->add_option("--p", a.p)->required();
    s->add_option("--points", a.points)->required();
    a.mode.attach(s);
    auto* e = thread->add_subcommand("extend", "all extensions by further levels");
    e->add_option("--p", a.p)->required();
    e->add_option("--points", a.points)->required();
    e->add_option("--levels", a.levels)->required();
    a.mode.attach(e);
    auto* c = thread->add_subcommand("commute", "check a recipe against the bonding maps");
    c->add_option("--recipe", a.recipe)->required();
    c->add_option("--bound", a.address_bound);
    auto* ap = thread->add_subcommand("apply", "apply a recipe to a thread");
    ap->add_option("--recipe", a.recipe)->required();
    ap->add_option("--points", a.points)->required();
  }

  auto* indecomp = app.add_subcommand("indecomp", "indecomposability witness for a covering arc pair");
  indecomp->add_option("--pn", a.pn)->required();
  indecomp->add_option("--stage", a.stage)->required();
  indecomp->add_option("--c", a.c_arc)->required();
  indecomp->add_option("--g", a.g_arc)->required();
  a.mode.attach(indecomp);

  auto* chain = app.add_subcommand("chain-check", "circular chain test for an arc cover");
  chain->add_option("--stage", a.stage)->required();
  chain->add_option("--arcs", a.arcs)->required();
  chain->add_option("--pullback", a.pullback, "pull the cover back through phi^m first");
  a.mode.attach(chain);

  auto* coh = app.add_subcommand("cohomology", "first Cech cohomology");
  coh->require_subcommand(1);
  {
    auto* s = coh->add_subcommand("invariant");
    s->add_option("--s", a.s)->required();
    s = coh->add_subcommand("equiv");
    s->add_option("--a", a.a)->required();
    s->add_option("--b", a.b)->required();
    s = coh->add_subcommand("member");
    s->add_option("--s", a.s)->required();
    s->add_option("--r", a.r)->required();
    s = coh->add_subcommand("degree");
    s->add_option("--m", a.m)->required();
    s->add_option("--n", a.n)->required();
    for (const char* op : {"dl-add", "dl-equal"}) {
      s = coh->add_subcommand(op);
      s->add_option("--s", a.s)->required();
      s->add_option("--u", a.u)->required();
      s->add_option("--v", a.v)->required();
    }
    s = coh->add_subcommand("dl-neg");
    s->add_option("--s", a.s)->required();
    s->add_option("--u", a.u)->required();
    s = coh->add_subcommand("distinct");
    s->add_option("--count", a.count)->required();
  }

  CommandResult res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.text = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.document = error_json(ErrorCode::Usage, e.what(), std::nullopt);
    return res;
  }

  auto chosen = [](CLI::App* parent) { return parent->get_subcommands().front(); };
  try {
    const Limits lim = limits_from_env();
    json doc;
    if (ord->parsed()) doc = run_ordinal(chosen(ord)->get_name(), a);
    else if (classify->parsed()) doc = run_classify(a);
    else if (pair->parsed()) doc = run_pair(a);
    else if (orbit->parsed()) doc = run_orbit(a, lim);
    else if (fib->parsed()) doc = run_fiber(a, lim);
    else if (stage->parsed()) doc = run_stage(chosen(stage)->get_name(), a, lim);
    else if (thread->parsed()) doc = run_thread(chosen(thread)->get_name(), a, lim);
    else if (indecomp->parsed()) doc = run_indecomp(a, lim);
    else if (chain->parsed()) doc = run_chain(a, lim);
    else doc = run_cohomology(chosen(coh)->get_name(), a);
    res.document = std::move(doc);
  } catch (const Error& e) {
    res.exit_code = 1;
    res.document = error_json(e.code(), e.what(), e.position());
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.document = error_json(ErrorCode::DomainError, e.what(), std::nullopt);
  }
  if (format == "text") res.text = render_text(res.document);
  return res;
}

}  // namespace solenoid
