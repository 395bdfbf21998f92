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

#include "mdual/api.hpp"

#include <sstream>

#include "mdual/sweep.hpp"

namespace mdual::api {
namespace {

std::vector<Mode> modes_of(const std::string& name) {
  if (name == "all") return {all_modes().begin(), all_modes().end()};
  return {parse_mode(name)};
}

std::string rule_name(const std::string& rule) {
  return rule.rfind("monotone", 0) == 0 ? rule : "axiom " + rule;
}

struct Corpus {
  std::vector<NamedFrame> frames;
  std::vector<NamedSpace> spaces;
};

Corpus load(const std::vector<Named>& inputs) {
  Corpus c;
  for (const auto& [name, doc] : inputs) {
    const auto kind = detect_kind(doc);
    if (kind == "frame")
      c.frames.push_back({name, frame_from_json(doc)});
    else if (kind == "space")
      c.spaces.push_back({name, space_from_json(doc)});
    else
      throw Error(ErrorKind::InvalidInput, "'" + name + "' is neither a frame nor a space", {name});
  }
  return c;
}

Json with_input(Json verdict, const std::string& name) {
  Json j{{"input", name}};
  for (auto& [k, v] : verdict.items()) j[k] = v;
  return j;
}

}  // namespace

Json validate(const Json& doc) {
  const auto kind = detect_kind(doc);
  if (kind == "lattice") {
    const auto l = lattice_from_json(doc);
    return Json{{"kind", kind}, {"valid", true}, {"elements", l.size()},
                {"join_irreducibles", join_irreducibles(l).size()}};
  }
  if (kind == "frame") {
    const auto raw = frame_tables_from_json(doc);
    const auto violations = modal_frame_violations(raw.lattice, raw.box, raw.dia);
    if (!violations.empty()) {
      Json vs = Json::array();
      for (const auto& v : violations) {
        Json w = Json::array();
        for (auto e : v.witness) w.push_back(raw.lattice.id(e));
        vs.push_back(Json{{"rule", rule_name(v.rule)}, {"witness", std::move(w)}});
      }
      Json err;
      try {
        validate_modal_frame(raw.lattice, raw.box, raw.dia);
      } catch (const Error& e) {
        err = to_json(e);
      }
      return Json{{"kind", kind}, {"valid", false}, {"error", err}, {"violations", std::move(vs)}};
    }
    const auto f = validate_modal_frame(raw.lattice, raw.box, raw.dia);
    return Json{{"kind", kind}, {"valid", true}, {"elements", f.size()},
                {"class", to_json(classify_frame(f))}, {"replete", frame_is_replete(f)}};
  }
  if (kind == "space") {
    const auto s = space_from_json(doc);
    return Json{{"kind", kind}, {"valid", true}, {"points", s.size()},
                {"opens", s.opens().size()}, {"class", to_json(classify_space(s))}};
  }
  throw Error(ErrorKind::InvalidInput, "document is not a lattice, frame or space");
}

Json omega(const Json& space) {
  const auto s = space_from_json(space);
  const auto report = omega_class_report(s);
  return Json{{"frame", frame_to_json(omega_space(s))},
              {"report", to_json(report)},
              {"pass", all_ok(report.implications)}};
}

Json points(const Json& frame, const std::string& mode, bool trace) {
  const auto f = frame_from_json(frame);
  const auto fa = build_point_space(f, parse_mode(mode));
  auto j = to_json(fa, trace);
  j["pass"] = all_ok(fa.checks);
  return j;
}

Json check(const std::string& kind, const std::string& mode, const std::vector<Named>& inputs) {
  const auto modes = modes_of(mode);
  const auto corpus = load(inputs);
  Json results = Json::array();
  bool pass = true;
  auto add = [&](Json r) {
    pass = pass && r.value("pass", true);
    results.push_back(std::move(r));
  };
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidInput, std::string("check ") + kind + " needs " + what);
  };

  if (kind == "spatial") {
    require(!corpus.frames.empty() && corpus.spaces.empty(), "frame inputs");
    for (const auto& [name, f] : corpus.frames)
      for (auto m : modes) add(with_input(to_json(check_spatial(f, m)), name));
  } else if (kind == "sober") {
    require(!corpus.spaces.empty() && corpus.frames.empty(), "space inputs");
    for (const auto& [name, s] : corpus.spaces)
      for (auto m : modes) add(with_input(to_json(check_sober(s, m)), name));
  } else if (kind == "triangles") {
    require(!inputs.empty(), "frame or space inputs");
    for (const auto& [name, f] : corpus.frames)
      for (auto m : modes) add(with_input(to_json(check_triangles(f, m)), name));
    for (const auto& [name, s] : corpus.spaces)
      for (auto m : modes) add(with_input(to_json(check_triangles(s, m)), name));
  } else if (kind == "adjunction") {
    require(!corpus.frames.empty() && !corpus.spaces.empty(), "at least one frame and one space");
    for (const auto& [fname, f] : corpus.frames)
      for (const auto& [sname, s] : corpus.spaces)
        for (auto m : modes)
          add(with_input(to_json(check_adjunction_bijection(f, s, m)), fname + " / " + sname));
  } else if (kind == "duality") {
    for (auto m : modes) add(to_json(duality_report(corpus.frames, corpus.spaces, m)));
  } else if (kind == "correspondence") {
    require(!inputs.empty(), "frame or space inputs");
    for (const auto& [name, f] : corpus.frames)
      for (auto m : modes) add(with_input(to_json(correspondence_report(f, m)), name));
    for (const auto& [name, s] : corpus.spaces) {
      const auto checks = correspondence_checks(s);
      add(Json{{"input", name}, {"check", "correspondence"}, {"side", "space"},
               {"pass", all_ok(checks)}, {"checks", to_json(checks)}});
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown check '" + kind + "'", {kind});
  }
  return Json{{"check", kind}, {"mode", mode}, {"pass", pass}, {"results", std::move(results)}};
}

Json modelcheck(const Json& space, const Json& valuation, const std::string& formula,
                const std::optional<std::string>& point, bool allow_implication) {
  Model model{space_from_json(space), {}};
  model.valuation = valuation_from_json(valuation, model.space);
  const auto f = parse_formula(formula);
  const EvalOptions options{allow_implication};
  const auto den = evaluate(model, *f, options);
  Json j{{"formula", to_string(*f)}, {"denotation", points_json(model.space, den)}};
  if (point) {
    const bool sat = satisfies(model, *point, *f, options);
    j["point"] = *point;
    j["satisfied"] = sat;
    j["pass"] = sat;
  }
  return j;
}

Json bisim(const Json& source, const Json& target, const Json& map, const Json& valuations,
           std::size_t depth, bool allow_implication) {
  SpaceMorphism f{space_from_json(source), space_from_json(target), {}};
  f.map = space_map_from_json(map, f.source, f.target);
  if (!valuations.is_object() || !valuations.contains("source") || !valuations.contains("target"))
    throw Error(ErrorKind::InvalidInput, "valuations need \"source\" and \"target\" objects");
  const auto vs = valuation_from_json(valuations["source"], f.source);
  const auto vt = valuation_from_json(valuations["target"], f.target);
  const auto r = bisim_invariance_check(f, vs, vt, depth, EvalOptions{allow_implication});
  Json j{{"check", "bisim"},
         {"pass", r.pass},
         {"depth", r.depth},
         {"distinct_formulas", r.distinct_formulas},
         {"morphism", to_json(classify_space_morphism(f))}};
  if (!r.pass) {
    j["counterexample"] = r.counterexample;
    j["point"] = r.point;
  }
  return j;
}

Json idl(const Json& frame) {
  const auto f = frame_from_json(frame);
  const auto ic = ideal_completion(f);
  const auto cr = compacts_reflection(f);
  Json compacts = Json::array();
  for (auto e : cr.compacts) compacts.push_back(f.lattice.id(e));
  Json transfer = Json::array();
  for (const auto& t : cr.transfer)
    transfer.push_back(Json{{"rule", rule_name(t.rule)}, {"on_frame", t.on_frame},
                            {"on_compacts", t.on_compacts}});
  const bool strict = ic.unit_class.box_strict() && ic.unit_class.dia_strict();
  return Json{{"completion", frame_to_json(ic.frame)},
              {"unit", frame_map_to_json(f.lattice, ic.frame.lattice, ic.unit)["map"]},
              {"unit_class", to_json(ic.unit_class, f.lattice)},
              {"unit_strict", strict},
              {"unit_is_iso", ic.unit_is_iso},
              {"modally_spectral", ic.modally_spectral},
              {"compacts", {{"elements", std::move(compacts)},
                            {"reflection_is_iso", cr.is_iso},
                            {"transfer", std::move(transfer)},
                            {"transfer_agrees", cr.transfer_agrees()}}},
              {"pass", ic.modally_spectral && strict && ic.unit_is_iso}};
}

Json sweep(std::size_t max_lattice, std::size_t max_points, const std::vector<std::string>& modes) {
  SweepOptions o;
  o.max_lattice = max_lattice;
  o.max_points = max_points;
  for (const auto& m : modes)
    for (auto mode : modes_of(m)) o.modes.push_back(mode);
  const auto r = mdual::sweep(o);
  Json suites = Json::object();
  for (const auto& [name, t] : r.suites) {
    Json s{{"passed", t.passed}, {"failed", t.failed}, {"vacuous", t.vacuous}};
    if (!t.first_failure.empty()) s["first_failure"] = t.first_failure;
    suites[name] = std::move(s);
  }
  return Json{{"check", "sweep"},
              {"bounds", {{"lattice_elements", max_lattice}, {"points", max_points}}},
              {"lattices", r.lattices},
              {"frames", r.frames},
              {"spaces", r.spaces},
              {"pass", r.pass()},
              {"suites", std::move(suites)}};
}

int exit_code(const Json& doc) {
  if (doc.contains("valid") && !doc["valid"].get<bool>()) return 2;
  if (doc.contains("pass") && !doc["pass"].get<bool>()) return 1;
  return 0;
}

namespace {

std::string mark(const Json& c) {
  if (c.contains("premise") && !c["premise"].get<bool>()) return "n/a ";
  return c.value("ok", c.value("pass", true)) ? "ok  " : "FAIL";
}

void render_checks(std::ostream& out, const Json& checks, const std::string& indent) {
  for (const auto& c : checks) {
    out << indent << mark(c) << " " << c.value("name", std::string());
    if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
    out << "\n";
  }
}

void render_verdict(std::ostream& out, const Json& v, const std::string& indent) {
  out << indent << (v.value("pass", true) ? "PASS" : "FAIL") << " " << v.value("check", "");
  if (!v.value("mode", std::string()).empty()) out << " [" << v["mode"].get<std::string>() << "]";
  if (v.contains("input")) out << " " << v["input"].get<std::string>();
  if (v.contains("applicable") && !v["applicable"].get<bool>()) out << " (not applicable)";
  out << "\n";
  if (v.contains("checks")) render_checks(out, v["checks"], indent + "  ");
  if (v.contains("rows"))
    for (const auto& r : v["rows"])
      out << indent << "  " << (r["ok"].get<bool>() ? "ok  " : "FAIL") << " "
          << r["property"].get<std::string>() << ": frame " << r["frame_side"].dump() << ", space "
          << r["space_side"].dump() << (r["asserted"].get<bool>() ? "" : " (not asserted)") << "\n";
  if (v.contains("counts"))
    for (const auto& [k, n] : v["counts"].items())
      out << indent << "  " << k << " = " << n.dump() << "\n";
  if (v.contains("entries"))
    for (const auto& e : v["entries"]) {
      out << indent << "  " << e["kind"].get<std::string>() << " " << e["name"].get<std::string>()
          << ": round trip " << (e["round_trip_iso"].get<bool>() ? "iso" : "not iso") << "\n";
      render_verdict(out, e["verdict"], indent + "    ");
    }
}

}  // namespace

std::string render_human(const Json& doc) {
  std::ostringstream out;
  if (doc.contains("error") && !doc.contains("valid")) {
    out << "error: " << doc["error"].value("message", std::string()) << "\n";
  } else if (doc.contains("valid")) {
    out << doc["kind"].get<std::string>() << ": " << (doc["valid"].get<bool>() ? "valid" : "invalid")
        << "\n";
    if (doc.contains("violations"))
      for (const auto& v : doc["violations"]) {
        out << "  " << v["rule"].get<std::string>() << " at";
        for (const auto& w : v["witness"]) out << " " << w.get<std::string>();
        out << "\n";
      }
    if (doc.contains("class"))
      for (const auto& [k, v] : doc["class"].items())
        if (v.is_boolean()) out << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  } else if (doc.contains("results")) {
    out << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " check " << doc["check"].get<std::string>()
        << "\n";
    for (const auto& r : doc["results"]) render_verdict(out, r, "  ");
  } else if (doc.value("check", "") == "sweep") {
    out << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " sweep: " << doc["lattices"].dump()
        << " lattices, " << doc["frames"].dump() << " frames, " << doc["spaces"].dump()
        << " spaces\n";
    for (const auto& [name, t] : doc["suites"].items()) {
      if (t["passed"].get<std::size_t>() + t["failed"].get<std::size_t>() == 0) continue;
      out << "  " << (t["failed"].get<std::size_t>() == 0 ? "ok  " : "FAIL") << " " << name
          << ": " << t["passed"].dump() << " passed, " << t["failed"].dump() << " failed, "
          << t["vacuous"].dump() << " vacuous";
      if (t.contains("first_failure")) out << " (first: " << t["first_failure"].get<std::string>() << ")";
      out << "\n";
    }
  } else if (doc.value("check", "") == "bisim") {
    out << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " bisim: "
        << doc["distinct_formulas"].dump() << " semantic classes up to depth "
        << doc["depth"].dump() << "\n";
    if (doc.contains("counterexample"))
      out << "  counterexample " << doc["counterexample"].get<std::string>() << " at "
          << doc["point"].get<std::string>() << "\n";
  } else if (doc.contains("formula")) {
    out << doc["formula"].get<std::string>() << " holds at " << doc["denotation"].dump() << "\n";
    if (doc.contains("point"))
      out << "  " << doc["point"].get<std::string>() << (doc["satisfied"].get<bool>() ? " ⊨ " : " ⊭ ")
          << doc["formula"].get<std::string>() << "\n";
  } else if (doc.contains("points") && doc.contains("phi")) {
    out << doc["points"].size() << " points of " << doc["prepoints"].dump() << " pre-points ["
        << doc["mode"].get<std::string>() << "]\n";
    for (const auto& p : doc["points"]) out << "  " << p["id"].get<std::string>() << "\n";
    out << "relation:";
    for (const auto& r : doc["space"]["relation"])
      out << " " << r[0].get<std::string>() << "→" << r[1].get<std::string>();
    out << "\n";
    render_checks(out, doc["checks"], "  ");
    if (doc.contains("trace"))
      for (const auto& t : doc["trace"])
        out << "  deleted " << t["prepoint"].get<std::string>() << ": no witness for "
            << t["element"].get<std::string>() << " under (" << t["condition"].dump() << ")\n";
  } else if (doc.contains("report") && doc.contains("frame")) {
    out << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " omega\n";
    render_checks(out, doc["report"]["implications"], "  ");
    for (const auto& c : doc["report"]["coincidences"])
      out << "  also " << c.get<std::string>() << "\n";
  } else if (doc.contains("completion")) {
    out << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " ideal completion: modally spectral "
        << doc["modally_spectral"].dump() << ", unit strict " << doc["unit_strict"].dump()
        << ", unit iso " << doc["unit_is_iso"].dump() << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace mdual::api
