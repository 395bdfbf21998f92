/* Copyright 2026 The mdual Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mdual/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace mdual {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::pair<std::string, std::string> string_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    bad(std::string(what) + " entries must be [a, b] string pairs");
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

// Runs fn, turning JSON library type errors into InvalidInput.
template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Elem> op_table(const Json& j, const FiniteLattice& l, const char* name) {
  if (!j.is_object()) bad(std::string(name) + " must be an object mapping elements to elements");
  std::vector<Elem> table(l.size(), l.size());
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) bad(std::string(name) + " values must be element ids");
    table[l.index_of(k)] = l.index_of(v.get<std::string>());
  }
  for (Elem a = 0; a < l.size(); ++a)
    if (table[a] == l.size())
      throw Error(ErrorKind::InvalidInput, std::string(name) + " has no value at " + l.id(a),
                  {l.id(a)});
  return table;
}

using Lookup = std::function<std::size_t(const std::string&)>;

std::vector<std::size_t> map_table(const Json& j, std::size_t n,
                                   const std::vector<std::string>& source_ids, const Lookup& source,
                                   const Lookup& target) {
  const auto& m = field(j, "map");
  if (!m.is_object()) bad("map must be an object");
  std::vector<std::size_t> out(n, n == 0 ? 0 : ~std::size_t{0});
  for (const auto& [k, v] : m.items()) {
    if (!v.is_string()) bad("map values must be ids");
    out[source(k)] = target(v.get<std::string>());
  }
  for (std::size_t i = 0; i < n; ++i)
    if (out[i] == ~std::size_t{0})
      throw Error(ErrorKind::InvalidInput, "map has no value at " + source_ids[i],
                  {source_ids[i]});
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("JSON parse error: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'", {path});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

FiniteLattice lattice_from_json(const Json& j) {
  return guarded([&] {
    auto ids = strings(field(j, "elements"), "elements");
    std::vector<FiniteLattice::LeqPair> leq;
    for (const auto& p : field(j, "leq")) leq.push_back(string_pair(p, "leq"));
    return FiniteLattice::validate(std::move(ids), leq);
  });
}

Json lattice_to_json(const FiniteLattice& l) {
  Json j;
  j["elements"] = l.ids();
  Json leq = Json::array();
  for (auto [a, b] : l.covers()) leq.push_back({l.id(a), l.id(b)});
  j["leq"] = std::move(leq);
  return j;
}

ModalFrame frame_tables_from_json(const Json& j) {
  return guarded([&] {
    auto l = lattice_from_json(field(j, "lattice"));
    auto box = op_table(field(j, "box"), l, "box");
    auto dia = op_table(field(j, "dia"), l, "dia");
    return ModalFrame{std::move(l), std::move(box), std::move(dia)};
  });
}

ModalFrame frame_from_json(const Json& j) {
  auto f = frame_tables_from_json(j);
  return validate_modal_frame(std::move(f.lattice), std::move(f.box), std::move(f.dia));
}

Json frame_to_json(const ModalFrame& f) {
  Json j;
  j["lattice"] = lattice_to_json(f.lattice);
  Json box = Json::object(), dia = Json::object();
  for (Elem a = 0; a < f.size(); ++a) {
    box[f.lattice.id(a)] = f.lattice.id(f.box[a]);
    dia[f.lattice.id(a)] = f.lattice.id(f.dia[a]);
  }
  j["box"] = std::move(box);
  j["dia"] = std::move(dia);
  return j;
}

RelationalSpace space_from_json(const Json& j) {
  return guarded([&] {
    auto points = strings(field(j, "points"), "points");
    std::vector<std::vector<std::string>> opens;
    const auto& o = field(j, "opens");
    if (!o.is_array()) bad("opens must be an array");
    for (const auto& u : o) opens.push_back(strings(u, "opens"));
    std::vector<RelationalSpace::Pair> rel;
    const auto& r = field(j, "relation");
    if (!r.is_array()) bad("relation must be an array");
    for (const auto& p : r) rel.push_back(string_pair(p, "relation"));
    return RelationalSpace::validate(std::move(points), opens, rel);
  });
}

Json points_json(const RelationalSpace& s, const Subset& u) {
  Json out = Json::array();
  for_each_member(u, [&](std::size_t x) { out.push_back(s.id(x)); });
  return out;
}

Json space_to_json(const RelationalSpace& s) {
  Json j;
  j["points"] = s.ids();
  Json opens = Json::array();
  for (const auto& u : s.opens()) opens.push_back(points_json(s, u));
  j["opens"] = std::move(opens);
  Json rel = Json::array();
  for (Point x = 0; x < s.size(); ++x)
    for_each_member(s.successors(x), [&](std::size_t y) { rel.push_back({s.id(x), s.id(y)}); });
  j["relation"] = std::move(rel);
  return j;
}

std::vector<Elem> frame_map_from_json(const Json& j, const FiniteLattice& source,
                                      const FiniteLattice& target) {
  return guarded([&] {
    auto src = [&](const std::string& id) { return source.index_of(id); };
    auto tgt = [&](const std::string& id) { return target.index_of(id); };
    return map_table(j, source.size(), source.ids(), src, tgt);
  });
}

std::vector<Point> space_map_from_json(const Json& j, const RelationalSpace& source,
                                       const RelationalSpace& target) {
  return guarded([&] {
    auto src = [&](const std::string& id) { return source.index_of(id); };
    auto tgt = [&](const std::string& id) { return target.index_of(id); };
    return map_table(j, source.size(), source.ids(), src, tgt);
  });
}

Json frame_map_to_json(const FiniteLattice& source, const FiniteLattice& target,
                       const std::vector<Elem>& map) {
  Json m = Json::object();
  for (Elem a = 0; a < map.size(); ++a) m[source.id(a)] = target.id(map[a]);
  return Json{{"map", std::move(m)}};
}

Json space_map_to_json(const RelationalSpace& source, const RelationalSpace& target,
                       const std::vector<Point>& map) {
  Json m = Json::object();
  for (Point x = 0; x < map.size(); ++x) m[source.id(x)] = target.id(map[x]);
  return Json{{"map", std::move(m)}};
}

Valuation valuation_from_json(const Json& j, const RelationalSpace& s) {
  return guarded([&] {
    if (!j.is_object()) bad("valuation must be an object mapping variables to point lists");
    std::map<std::string, std::vector<std::string>> raw;
    for (const auto& [k, v] : j.items()) raw[k] = strings(v, "valuation");
    return make_model(s, raw).valuation;
  });
}

Json valuation_to_json(const RelationalSpace& s, const Valuation& v) {
  Json j = Json::object();
  for (const auto& [name, u] : v) j[name] = points_json(s, u);
  return j;
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"ok", c.ok()}, {"premise", c.premise}, {"holds", c.holds}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const std::vector<Check>& cs) {
  Json j = Json::array();
  for (const auto& c : cs) j.push_back(to_json(c));
  return j;
}

Json to_json(const Error& e) {
  Json j{{"kind", to_string(e.kind())}, {"message", e.what()}, {"witnesses", e.witnesses()}};
  if (auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    j["line"] = se->line();
    j["column"] = se->column();
    j["expected"] = se->expected();
  }
  return j;
}

Json to_json(const FrameClass& c) {
  Json axioms = Json::object();
  for (const auto& [ax, ok] : c.axioms) axioms[std::to_string(ax)] = ok;
  return Json{{"modal", c.modal},
              {"lower", c.lower},
              {"convex", c.convex},
              {"serial", c.serial},
              {"equivalence", c.equivalence},
              {"modally_spectral", c.modally_spectral},
              {"axioms", std::move(axioms)}};
}

Json to_json(const SpaceClass& c) {
  return Json{{"usc", c.usc},
              {"lsc", c.lsc},
              {"continuous", c.continuous},
              {"serial", c.serial},
              {"reflexive", c.reflexive},
              {"symmetric", c.symmetric},
              {"transitive", c.transitive},
              {"equivalence_space", c.equivalence_space}};
}

Json to_json(const MorphismClass& c, const FiniteLattice& source) {
  Json j{{"kind", to_string(c.kind)},
         {"frame_morphism", c.frame_morphism},
         {"box_lax", c.box_lax},
         {"dia_lax", c.dia_lax},
         {"box_strict", c.box_strict()},
         {"dia_strict", c.dia_strict()}};
  if (!c.detail.empty()) {
    j["detail"] = c.detail;
    Json w = Json::array();
    for (auto e : c.witness) w.push_back(source.id(e));
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const SpaceMorphismClass& c) {
  return Json{{"level", to_string(c.level)},
              {"continuous", c.continuous},
              {"forward", c.forward},
              {"back_p", c.back_p},
              {"back_q", c.back_q},
              {"open_map", c.open_map},
              {"witnesses", c.witnesses}};
}

Json to_json(const Verdict& v) {
  const auto& info = mode_info(v.mode);
  Json j{{"check", v.kind},
         {"mode", info.name},
         {"frame_category", info.frame_category},
         {"space_category", info.space_category},
         {"applicable", v.applicable},
         {"pass", v.pass()},
         {"checks", to_json(v.checks)}};
  if (!v.properties.empty()) {
    Json p = Json::object();
    for (const auto& [k, b] : v.properties) p[k] = b;
    j["properties"] = std::move(p);
  }
  if (!v.counts.empty()) {
    Json c = Json::object();
    for (const auto& [k, n] : v.counts) c[k] = n;
    j["counts"] = std::move(c);
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json to_json(const DualityReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"name", e.name},
                           {"kind", e.kind},
                           {"round_trip_iso", e.round_trip_iso},
                           {"verdict", to_json(e.verdict)}});
  return Json{{"check", "duality"},
              {"mode", mode_info(r.mode).name},
              {"pass", r.failed == 0},
              {"summary", {{"passed", r.passed}, {"failed", r.failed}, {"not_applicable", r.not_applicable}}},
              {"entries", std::move(entries)}};
}

Json to_json(const CorrespondenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"property", row.property},
                        {"axioms", row.axioms},
                        {"frame_side", row.frame_side},
                        {"space_side", row.space_side},
                        {"asserted", row.asserted},
                        {"ok", row.ok()}});
  return Json{{"check", "correspondence"},
              {"mode", mode_info(r.mode).name},
              {"applicable", r.applicable},
              {"pass", r.pass()},
              {"rows", std::move(rows)}};
}

Json to_json(const OmegaClassReport& r) {
  return Json{{"space", to_json(r.space)},
              {"frame", to_json(r.frame)},
              {"implications", to_json(r.implications)},
              {"coincidences", r.coincidences}};
}

Json to_json(const PointSpace& fa, bool with_trace) {
  const auto& info = mode_info(fa.mode);
  const auto& l = fa.frame.lattice;
  Json pts = Json::array();
  for (std::size_t i = 0; i < fa.points.size(); ++i) {
    const auto& u = fa.points[i];
    Json p{{"id", fa.space.id(i)}, {"character", l.id(u.character.prime)}, {"element", l.id(u.element)}};
    if (info.triple) p["filter"] = l.id(u.filter);
    pts.push_back(std::move(p));
  }
  Json phi = Json::object();
  for (Elem c = 0; c < l.size(); ++c) phi[l.id(c)] = points_json(fa.space, fa.phi[c]);
  Json j{{"mode", info.name},
         {"frame_category", info.frame_category},
         {"space_category", info.space_category},
         {"prepoints", fa.points.size() + fa.trace.size()},
         {"points", std::move(pts)},
         {"space", space_to_json(fa.space)},
         {"space_class", to_json(classify_space(fa.space))},
         {"phi", std::move(phi)},
         {"phi_class", to_json(fa.phi_class, l)},
         {"checks", to_json(fa.checks)}};
  if (with_trace) {
    const auto cands = enumerate_prepoints(fa.frame, fa.mode);
    Json trace = Json::array();
    for (const auto& s : fa.trace)
      trace.push_back(Json{{"prepoint", point_name(l, fa.mode, cands[s.candidate])},
                           {"element", l.id(s.element)},
                           {"condition", s.condition}});
    j["trace"] = std::move(trace);
  }
  return j;
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) return "";
  if (j.contains("box") || j.contains("dia")) return "frame";
  if (j.contains("points")) return "space";
  if (j.contains("elements")) return "lattice";
  return "";
}

}  // namespace mdual
