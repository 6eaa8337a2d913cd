#include "fairdiv/io.hpp"

#include <fstream>
#include <sstream>

#include "fairdiv/error.hpp"

namespace fairdiv::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw FairDivError(Errc::kParseError, where + ": " + what);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& where, const std::string& key) { return where + "." + key; }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field \"" + key + "\"");
  return *it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) bad(where, "integer out of range");
  return static_cast<int>(v);
}

std::int64_t integer64(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where, "expected true or false");
  return j.get<bool>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(integer(j[i], at(where, i)));
  return out;
}

std::vector<Rational> rational_list(const json& j, const std::string& where) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(parse_rational(j[i], at(where, i)));
  return out;
}

// Library errors raised while building a parsed value keep their code but
// gain the field path.
template <typename F>
auto build(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const FairDivError& e) {
    if (e.code() == Errc::kParseError) throw;
    const std::string msg = e.what();
    const std::size_t skip = std::string(errc_name(e.code())).size() + 2;
    throw FairDivError(e.code(), where + ": " + msg.substr(std::min(skip, msg.size())));
  }
}

std::vector<Piece> piece_list(const json& j, const std::string& where) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(parse_piece(j[i], at(where, i)));
  return out;
}

const char* kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::kCut: return "cut";
    case TraceStep::Kind::kChoose: return "choose";
    case TraceStep::Kind::kTake: return "take";
  }
  return "cut";
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Piece& p) {
  json out = json::array();
  for (const auto& iv : p.intervals()) out.push_back(json::array({to_json(iv.lo), to_json(iv.hi)}));
  return out;
}

json to_json(const Valuation& v) {
  json bps = json::array();
  json dens = json::array();
  for (const auto& b : v.breakpoints()) bps.push_back(to_json(b));
  for (const auto& d : v.densities()) dens.push_back(to_json(d));
  return {{"breakpoints", bps}, {"densities", dens}};
}

json to_json(std::span<const Valuation> vals) {
  json out = json::array();
  for (const auto& v : vals) out.push_back(to_json(v));
  return out;
}

json to_json(const Allocation& a) {
  json out = json::array();
  for (const auto& p : a.pieces()) out.push_back(to_json(p));
  return out;
}

json to_json(const PartialAllocation& pa) {
  json pieces = json::array();
  for (const auto& p : pa.pieces()) pieces.push_back(to_json(p));
  return {{"pieces", pieces}, {"residue", to_json(pa.residue())}};
}

json to_json(const AgentGraph& g) {
  const bool undirected = g.is_symmetric();
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) {
    if (!undirected || i < j) edges.push_back(json::array({i, j}));
  }
  return {{"n", g.n()}, {"edges", edges}, {"undirected", undirected}};
}

json to_json(const QueryLedger& l) {
  json per = json::object();
  for (const auto& [agent, c] : l.per_agent()) per[std::to_string(agent)] = {{"evals", c.evals}, {"cuts", c.cuts}};
  return {{"evals", l.evals()}, {"cuts", l.cuts()}, {"total", l.total()}, {"per_agent", per}};
}

json to_json(const FairnessReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"agent", w.agent},
                  {"other", w.other ? json(*w.other) : json(nullptr)},
                  {"lhs", to_json(w.lhs)},
                  {"rhs", to_json(w.rhs)}});
  }
  return {{"satisfied", r.satisfied}, {"witnesses", ws}};
}

json to_json(const TraceStep& s) {
  return {{"agent", s.agent},
          {"kind", kind_name(s.kind)},
          {"piece", s.piece},
          {"point", s.point ? to_json(*s.point) : json(nullptr)}};
}

json to_json(std::span<const TraceStep> trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back(to_json(s));
  return out;
}

json to_json(const SeparatingInstance& s) {
  return {{"valuations", to_json(std::span<const Valuation>(s.valuations))},
          {"allocation", to_json(s.allocation)},
          {"holds_on", to_json(s.holds_on)},
          {"fails_on", to_json(s.fails_on)},
          {"pivot_agent", s.pivot_agent},
          {"construction",
           s.construction == SeparatingInstance::Case::kStrictSubgraph ? "strict-subgraph" : "extra-edge"}};
}

json to_json(const LinkedPartition& lp) {
  json sets = json::object();
  for (const auto& [hub, members] : lp.sets) sets[std::to_string(hub)] = members;
  return {{"k", lp.k},
          {"epsilon", to_json(lp.epsilon)},
          {"b", to_json(lp.b)},
          {"hubs", lp.hubs},
          {"sets", sets}};
}

json to_json(const WelfareSummary& w) {
  return {{"optimal_welfare", to_json(w.optimal_welfare)},
          {"fair_welfare", to_json(w.fair_welfare)},
          {"ratio", to_json(w.ratio)},
          {"from_oracle", w.from_oracle}};
}

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const FairDivError& e) {
    bad(where, e.what());
  }
}

Piece parse_piece(const json& j, const std::string& where) {
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    const std::string w = at(where, i);
    if (!j[i].is_array() || j[i].size() != 2) bad(w, "expected [lo, hi]");
    ivs.push_back({parse_rational(j[i][0], at(w, 0)), parse_rational(j[i][1], at(w, 1))});
  }
  return build(where, [&] { return Piece(std::move(ivs)); });
}

Valuation parse_valuation(const json& j, const std::string& where) {
  auto bps = rational_list(field(j, "breakpoints", where), at(where, "breakpoints"));
  auto dens = rational_list(field(j, "densities", where), at(where, "densities"));
  return build(where, [&] { return Valuation(std::move(bps), std::move(dens)); });
}

std::vector<Valuation> parse_valuations(const json& j, const std::string& where) {
  std::vector<Valuation> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(parse_valuation(j[i], at(where, i)));
  return out;
}

Allocation parse_allocation(const json& j, const std::string& where) {
  auto pieces = piece_list(j, where);
  return build(where, [&] { return Allocation(std::move(pieces)); });
}

PartialAllocation parse_partial_allocation(const json& j, const std::string& where) {
  auto pieces = piece_list(field(j, "pieces", where), at(where, "pieces"));
  auto residue = parse_piece(field(j, "residue", where), at(where, "residue"));
  return build(where, [&] { return PartialAllocation(std::move(pieces), std::move(residue)); });
}

AgentGraph parse_graph(const json& j, const std::string& where) {
  const int n = integer(field(j, "n", where), at(where, "n"));
  if (n < 0) bad(at(where, "n"), "must be nonnegative");
  bool undirected = false;
  if (j.contains("undirected")) undirected = boolean(j["undirected"], at(where, "undirected"));
  const std::string ew = at(where, "edges");
  const json& ej = array(field(j, "edges", where), ew);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string w = at(ew, i);
    if (!ej[i].is_array() || ej[i].size() != 2) bad(w, "expected [i, j]");
    edges.emplace_back(integer(ej[i][0], at(w, 0)), integer(ej[i][1], at(w, 1)));
  }
  return build(where, [&] { return undirected ? AgentGraph::undirected(n, edges) : AgentGraph(n, edges); });
}

QueryLedger parse_ledger(const json& j, const std::string& where) {
  QueryLedger l;
  const std::string pw = at(where, "per_agent");
  const json& per = field(j, "per_agent", where);
  if (!per.is_object()) bad(pw, "expected an object");
  for (const auto& [key, c] : per.items()) {
    int agent = 0;
    try {
      std::size_t used = 0;
      agent = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(pw, "agent key \"" + key + "\" is not an integer");
    }
    const std::string w = at(pw, key);
    const auto evals = integer64(field(c, "evals", w), at(w, "evals"));
    const auto cuts = integer64(field(c, "cuts", w), at(w, "cuts"));
    l.record_eval(agent, evals);
    for (std::int64_t r = 0; r < cuts; ++r) l.record_cut(agent);
  }
  if (integer64(field(j, "evals", where), at(where, "evals")) != l.evals() ||
      integer64(field(j, "cuts", where), at(where, "cuts")) != l.cuts()) {
    bad(where, "totals disagree with per_agent counts");
  }
  return l;
}

FairnessReport parse_fairness_report(const json& j, const std::string& where) {
  FairnessReport r;
  r.satisfied = boolean(field(j, "satisfied", where), at(where, "satisfied"));
  const std::string ww = at(where, "witnesses");
  const json& ws = array(field(j, "witnesses", where), ww);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const std::string w = at(ww, i);
    Witness wit;
    wit.agent = integer(field(ws[i], "agent", w), at(w, "agent"));
    if (ws[i].contains("other") && !ws[i]["other"].is_null()) wit.other = integer(ws[i]["other"], at(w, "other"));
    wit.lhs = parse_rational(field(ws[i], "lhs", w), at(w, "lhs"));
    wit.rhs = parse_rational(field(ws[i], "rhs", w), at(w, "rhs"));
    r.witnesses.push_back(std::move(wit));
  }
  return r;
}

TraceStep parse_trace_step(const json& j, const std::string& where) {
  TraceStep s;
  s.agent = integer(field(j, "agent", where), at(where, "agent"));
  const json& kind = field(j, "kind", where);
  const std::string kind_str = kind.is_string() ? kind.get<std::string>() : "";
  if (kind_str == "cut") {
    s.kind = TraceStep::Kind::kCut;
  } else if (kind_str == "choose") {
    s.kind = TraceStep::Kind::kChoose;
  } else if (kind_str == "take") {
    s.kind = TraceStep::Kind::kTake;
  } else {
    bad(at(where, "kind"), "expected \"cut\", \"choose\" or \"take\"");
  }
  s.piece = integer(field(j, "piece", where), at(where, "piece"));
  if (j.contains("point") && !j["point"].is_null()) s.point = parse_rational(j["point"], at(where, "point"));
  return s;
}

std::vector<TraceStep> parse_trace(const json& j, const std::string& where) {
  std::vector<TraceStep> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(parse_trace_step(j[i], at(where, i)));
  return out;
}

SeparatingInstance parse_separating_instance(const json& j, const std::string& where) {
  auto vals = parse_valuations(field(j, "valuations", where), at(where, "valuations"));
  auto alloc = parse_allocation(field(j, "allocation", where), at(where, "allocation"));
  auto holds = parse_graph(field(j, "holds_on", where), at(where, "holds_on"));
  auto fails = parse_graph(field(j, "fails_on", where), at(where, "fails_on"));
  const int pivot = integer(field(j, "pivot_agent", where), at(where, "pivot_agent"));
  const json& c = field(j, "construction", where);
  SeparatingInstance::Case kind = SeparatingInstance::Case::kStrictSubgraph;
  if (c == "extra-edge") {
    kind = SeparatingInstance::Case::kExtraEdge;
  } else if (c != "strict-subgraph") {
    bad(at(where, "construction"), "expected \"strict-subgraph\" or \"extra-edge\"");
  }
  return SeparatingInstance{std::move(vals), std::move(alloc), std::move(holds), std::move(fails), pivot, kind};
}

LinkedPartition parse_linked_partition(const json& j, const std::string& where) {
  LinkedPartition lp;
  lp.k = integer(field(j, "k", where), at(where, "k"));
  lp.epsilon = parse_rational(field(j, "epsilon", where), at(where, "epsilon"));
  lp.b = parse_rational(field(j, "b", where), at(where, "b"));
  lp.hubs = int_list(field(j, "hubs", where), at(where, "hubs"));
  const std::string sw = at(where, "sets");
  const json& sets = field(j, "sets", where);
  if (!sets.is_object()) bad(sw, "expected an object");
  for (const auto& [key, members] : sets.items()) {
    int hub = 0;
    try {
      std::size_t used = 0;
      hub = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(sw, "hub key \"" + key + "\" is not an integer");
    }
    lp.sets[hub] = int_list(members, at(sw, key));
  }
  return lp;
}

WelfareSummary parse_welfare_summary(const json& j, const std::string& where) {
  WelfareSummary w;
  w.optimal_welfare = parse_rational(field(j, "optimal_welfare", where), at(where, "optimal_welfare"));
  w.fair_welfare = parse_rational(field(j, "fair_welfare", where), at(where, "fair_welfare"));
  w.ratio = parse_rational(field(j, "ratio", where), at(where, "ratio"));
  w.from_oracle = boolean(field(j, "from_oracle", where), at(where, "from_oracle"));
  return w;
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FairDivError(Errc::kParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FairDivError(Errc::kParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path.string());
}

}  // namespace fairdiv::io
