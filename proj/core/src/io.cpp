// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dconv/io.hpp"

#include <string>
#include <utility>

#include "codec.hpp"
#include "dconv/error.hpp"

namespace dconv {

namespace codec {

namespace {

Json point(const Point& p) {
  Json a = Json::array();
  for (Coord c : p) a.push_back(c);
  return a;
}

Json header(DocumentKind kind) {
  return Json{{"kind", document_kind_name(kind)}, {"version", kDocumentVersion}};
}

}  // namespace

Json encode(const LatticeSet& s) {
  Json j = header(DocumentKind::Set);
  j["dim"] = s.dim();
  j["lifted"] = s.lift_ones();
  Json pts = Json::array();
  for (const Point& p : s.points()) pts.push_back(point(p));
  j["points"] = std::move(pts);
  return j;
}

Json encode(const LatticeFn& f) {
  Json j = header(DocumentKind::Fn);
  j["dim"] = f.dim();
  j["lifted"] = f.lift_ones();
  j["ramp"] = f.ramp().to_string();
  Json entries = Json::array();
  for (const FnEntry& e : f.entries()) entries.push_back(Json{{"x", point(e.x)}, {"v", e.value.to_string()}});
  j["entries"] = std::move(entries);
  return j;
}

Json encode(const Network& net) {
  Json j = header(DocumentKind::Network);
  j["vertices"] = net.vertices();
  j["entrance"] = net.entrance();
  j["exit"] = net.exit();
  Json arcs = Json::array();
  for (const Arc& a : net.arcs()) {
    Json arc{{"tail", a.tail}, {"head", a.head}, {"lower", a.lower}, {"upper", a.upper}};
    Json cost = Json::array();
    for (Coord t = a.lower; t <= a.upper && !a.cost.is_zero(); ++t) {
      cost.push_back(Json{{"t", t}, {"v", a.cost_at(t).to_string()}});
    }
    arc["cost"] = std::move(cost);
    arcs.push_back(std::move(arc));
  }
  j["arcs"] = std::move(arcs);
  return j;
}

Json encode(const SplitSpec& spec) {
  Json j = header(DocumentKind::SplitSpec);
  j["blocks"] = spec.blocks;
  return j;
}

Json encode(const PartitionSpec& spec) {
  Json j = header(DocumentKind::PartitionSpec);
  std::size_t n = 0;
  Json groups = Json::array();
  for (const auto& g : spec.groups) {
    Json a = Json::array();
    for (std::size_t i : g) a.push_back(i + 1);
    n += g.size();
    groups.push_back(std::move(a));
  }
  j["dim"] = n;
  j["groups"] = std::move(groups);
  return j;
}

Json encode(const Window& w) {
  Json j = header(DocumentKind::Window);
  j["dim"] = w.dim();
  j["lo"] = point(w.lo());
  j["hi"] = point(w.hi());
  return j;
}

Json encode(const Witness& w) {
  Json j{{"kind", witness_kind_name(w.kind)}};
  if (w.x.dim()) j["x"] = point(w.x);
  if (w.y.dim()) j["y"] = point(w.y);
  if (w.s.dim()) j["s"] = point(w.s);
  switch (w.kind) {
    case WitnessKind::Exchange:
    case WitnessKind::AxisConvexity:
      j["i"] = w.i + 1;
      break;
    case WitnessKind::SquareModularity:
      j["i"] = w.i + 1;
      j["j"] = w.j + 1;
      break;
    default:
      break;
  }
  return j;
}

}  // namespace codec

namespace {

using codec::Json;

constexpr std::string_view kKindNames[] = {"set",    "fn",     "network", "split-spec",
                                           "partition-spec", "window", "report", "verdict"};

[[noreturn]] void bad(const std::string& what) { throw InputError("malformed document: " + what); }

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

Coord integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<Coord>();
}

std::size_t count(const Json& j, const std::string& what) {
  Coord v = integer(j, what);
  if (v < 0) bad(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

Point point(const Json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of integers");
  if (j.size() != dim) {
    bad(what + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(dim));
  }
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = integer(j[i], what);
  return p;
}

Rational rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<Coord>());
  if (!j.is_string()) bad(what + " must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

std::size_t dimension(const Json& j) {
  std::size_t dim = count(field(j, "dim"), "dim");
  if (dim == 0 || dim > kMaxDim) bad("dim out of range");
  return dim;
}

std::vector<std::string> strings(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) bad(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

bool flag(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) return false;
  if (!it->is_boolean()) bad(std::string(name) + " must be a boolean");
  return it->get<bool>();
}

LatticeSet decode_set(const Json& j) {
  std::size_t dim = dimension(j);
  const Json& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  std::vector<Point> points;
  for (const Json& p : pts) points.push_back(point(p, dim, "point"));
  return LatticeSet(dim, std::move(points), flag(j, "lifted"));
}

LatticeFn decode_fn(const Json& j) {
  std::size_t dim = dimension(j);
  const Json& es = field(j, "entries");
  if (!es.is_array()) bad("entries must be an array");
  std::vector<FnEntry> entries;
  for (const Json& e : es) {
    if (!e.is_object()) bad("entries must be {x, v} objects");
    Rational v = rational(field(e, "v"), "entry value");
    // "inf" entries are outside the effective domain.
    if (v.is_infinite()) continue;
    entries.push_back({point(field(e, "x"), dim, "entry x"), v});
  }
  if (entries.empty()) bad("function has an empty effective domain");
  Rational ramp = 0;
  if (j.contains("ramp")) ramp = rational(j["ramp"], "ramp");
  return LatticeFn(dim, std::move(entries), flag(j, "lifted"), ramp);
}

Coord capacity(const Json& j, const std::string& what) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "-inf" || s == "+inf") {
      throw InputError("arc " + what + " is infinite; capacities must be finite. Replace it with a finite bound "
                       "that covers the window of interest (for example the range of the input coordinates)");
    }
  }
  return integer(j, "arc " + what);
}

Network decode_network(const Json& j) {
  const Json& arcs_json = field(j, "arcs");
  if (!arcs_json.is_array()) bad("arcs must be an array");
  std::vector<Arc> arcs;
  for (const Json& a : arcs_json) {
    if (!a.is_object()) bad("arcs must be objects");
    Arc arc;
    const Json& tail = field(a, "tail");
    const Json& head = field(a, "head");
    if (!tail.is_string() || !head.is_string()) bad("arc endpoints must be strings");
    arc.tail = tail.get<std::string>();
    arc.head = head.get<std::string>();
    arc.lower = capacity(field(a, "lower"), "lower bound");
    arc.upper = capacity(field(a, "upper"), "upper bound");
    if (arc.lower > arc.upper) bad("arc " + arc.tail + "->" + arc.head + " has lower > upper");
    if (a.contains("cost")) {
      const Json& cost = a["cost"];
      if (!cost.is_array()) bad("arc cost must be an array of {t, v}");
      if (!cost.empty()) {
        if (cost.size() != static_cast<std::size_t>(arc.upper - arc.lower + 1)) {
          bad("arc " + arc.tail + "->" + arc.head + " cost table must list every t in [lower, upper]");
        }
        std::vector<Rational> values(cost.size());
        std::vector<bool> seen(cost.size(), false);
        for (const Json& e : cost) {
          Coord t = integer(field(e, "t"), "cost t");
          if (t < arc.lower || t > arc.upper) bad("cost t outside the capacity interval");
          auto k = static_cast<std::size_t>(t - arc.lower);
          if (seen[k]) bad("cost t repeated");
          seen[k] = true;
          values[k] = rational(field(e, "v"), "cost value");
        }
        arc.cost = ArcCost::table(std::move(values));
      }
    }
    arcs.push_back(std::move(arc));
  }
  return Network(strings(field(j, "vertices"), "vertices"), std::move(arcs), strings(field(j, "entrance"), "entrance"),
                 strings(field(j, "exit"), "exit"));
}

SplitSpec decode_split(const Json& j) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.empty()) bad("blocks must be a nonempty array");
  SplitSpec spec;
  for (const Json& b : blocks) spec.blocks.push_back(count(b, "block size"));
  spec.validate(spec.blocks.size());
  return spec;
}

PartitionSpec decode_partition(const Json& j) {
  const Json& groups = field(j, "groups");
  if (!groups.is_array() || groups.empty()) bad("groups must be a nonempty array");
  PartitionSpec spec;
  for (const Json& g : groups) {
    if (!g.is_array()) bad("each group must be an array of 1-based indices");
    std::vector<std::size_t> group;
    for (const Json& i : g) {
      std::size_t k = count(i, "group index");
      if (k == 0) bad("group indices are 1-based");
      group.push_back(k - 1);
    }
    spec.groups.push_back(std::move(group));
  }
  std::size_t n = 0;
  for (const auto& g : spec.groups) n += g.size();
  if (j.contains("dim") && count(j["dim"], "dim") != n) bad("dim does not match the groups");
  spec.validate(n);
  return spec;
}

Window decode_window(const Json& j) {
  std::size_t dim = dimension(j);
  Point lo = point(field(j, "lo"), dim, "lo");
  Point hi = point(field(j, "hi"), dim, "hi");
  for (std::size_t i = 0; i < dim; ++i) {
    if (lo[i] > hi[i]) bad("window has lo > hi");
  }
  return Window(lo, hi);
}

Witness decode_witness(const Json& j) {
  Witness w;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("witness kind must be a string");
  auto k = parse_witness_kind(kind.get<std::string>());
  if (!k) bad("unknown witness kind " + kind.get<std::string>());
  w.kind = *k;
  auto opt_point = [&](const char* name) {
    if (!j.contains(name)) return Point();
    return point(j[name], j[name].size(), name);
  };
  w.x = opt_point("x");
  w.y = opt_point("y");
  w.s = opt_point("s");
  if (j.contains("i")) {
    std::size_t i = count(j["i"], "i");
    if (i == 0) bad("witness indices are 1-based");
    w.i = i - 1;
  }
  if (j.contains("j")) {
    std::size_t i = count(j["j"], "j");
    if (i == 0) bad("witness indices are 1-based");
    w.j = i - 1;
  }
  return w;
}

VerdictDocument decode_verdict(const Json& j) {
  VerdictDocument doc;
  const Json& label = field(j, "label");
  if (!label.is_string()) bad("label must be a string");
  auto l = parse_label(label.get<std::string>());
  if (!l) bad("unknown class label " + label.get<std::string>());
  doc.label = *l;
  const Json& member = field(j, "member");
  if (!member.is_boolean()) bad("member must be a boolean");
  doc.verdict.member = member.get<bool>();
  if (j.contains("witness") && !j["witness"].is_null()) doc.verdict.witness = decode_witness(j["witness"]);
  if (doc.verdict.member == doc.verdict.witness.has_value()) bad("a witness is present iff member is false");
  return doc;
}

Json encode_verdict(const VerdictDocument& v) {
  Json j{{"kind", "verdict"}, {"version", kDocumentVersion}};
  j["label"] = label_name(v.label);
  j["member"] = v.verdict.member;
  if (v.verdict.witness) j["witness"] = codec::encode(*v.verdict.witness);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string_view document_kind_name(DocumentKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

DocumentKind kind_of(const Document& doc) { return static_cast<DocumentKind>(doc.index()); }

std::string print_document(const Document& doc) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ReportDocument>) {
          return dump(Json::parse(v.json));
        } else if constexpr (std::is_same_v<T, VerdictDocument>) {
          return dump(encode_verdict(v));
        } else {
          return dump(codec::encode(v));
        }
      },
      doc);
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) bad("top level must be an object");
  const Json& kind = field(j, "kind");
  const Json& version = field(j, "version");
  if (!kind.is_string()) bad("kind must be a string");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    bad("unsupported version (expected " + std::to_string(kDocumentVersion) + ")");
  }
  const std::string k = kind.get<std::string>();
  try {
    if (k == "set") return decode_set(j);
    if (k == "fn") return decode_fn(j);
    if (k == "network") return decode_network(j);
    if (k == "split-spec") return decode_split(j);
    if (k == "partition-spec") return decode_partition(j);
    if (k == "window") return decode_window(j);
    if (k == "verdict") return decode_verdict(j);
    if (k == "report") return ReportDocument{dump(j)};
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    bad(e.what());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  bad("unknown kind \"" + k + "\"");
}

LatticeSet parse_set(std::string_view text) {
  Document doc = parse_document(text);
  if (!std::holds_alternative<LatticeSet>(doc)) {
    throw InputError("expected a set document, got " + std::string(document_kind_name(kind_of(doc))));
  }
  return std::get<LatticeSet>(std::move(doc));
}

LatticeFn parse_fn(std::string_view text) {
  Document doc = parse_document(text);
  if (!std::holds_alternative<LatticeFn>(doc)) {
    throw InputError("expected a fn document, got " + std::string(document_kind_name(kind_of(doc))));
  }
  return std::get<LatticeFn>(std::move(doc));
}

std::string report_document(const ClosureReport& report) {
  Json j{{"kind", "report"}, {"version", kDocumentVersion}, {"report", "closure-matrix"}};
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["max_dim"] = report.max_dim;
  j["ok"] = report.ok();
  Json cells = Json::array();
  for (const ClosureCell& c : report.cells) {
    Json cell{{"label", label_name(c.label)},
              {"operation", operation_name(c.op)},
              {"expected", c.expected ? "Y" : "N"},
              {"observed", c.observed ? "Y" : "N"},
              {"citation", c.citation},
              {"trials", c.trials},
              {"passed", c.passed},
              {"ok", c.ok()}};
    if (!c.failure.empty()) cell["failure"] = Json::parse(c.failure);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return dump(j);
}

std::string report_document(const std::vector<RecordReport>& records) {
  Json j{{"kind", "report"}, {"version", kDocumentVersion}, {"report", "counterexamples"}};
  bool ok = true;
  Json list = Json::array();
  for (const RecordReport& r : records) {
    ok = ok && r.passed;
    Json checks = Json::array();
    for (const RecordCheck& c : r.checks) checks.push_back(Json{{"check", c.what}, {"ok", c.ok}});
    list.push_back(Json{{"id", r.id}, {"passed", r.passed}, {"checks", std::move(checks)}});
  }
  j["ok"] = ok;
  j["records"] = std::move(list);
  return dump(j);
}

}  // namespace dconv
