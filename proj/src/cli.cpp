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

#include "mdual/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdual/api.hpp"

namespace mdual {
namespace {

namespace fs = std::filesystem;

// Directories expand to their *.json files in name order.
std::vector<api::Named> load_inputs(const std::vector<std::string>& paths) {
  std::vector<api::Named> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) out.emplace_back(f.filename().string(), read_json_file(f.string()));
    } else {
      out.emplace_back(fs::path(p).filename().string(), read_json_file(p));
    }
  }
  return out;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'", {path});
  f << j.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite modal dualities: build, verify and model-check"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  auto* human_flag = app.add_flag("--human", human, "Prose output");
  app.add_flag("--json", "JSON output (default)")->excludes(human_flag);

  std::string path, path2, mode, kind, formula, valuation, map, valuations, emit;
  std::optional<std::string> point;
  std::vector<std::string> inputs;
  std::vector<std::string> modes{"all"};
  bool trace = false, no_imp = false;
  std::size_t depth = 4, lattices = 5, spaces = 3;

  auto* validate = app.add_subcommand("validate", "Validate a lattice, frame or space file");
  validate->add_option("file", path)->required();

  auto* omega = app.add_subcommand("omega", "Modal frame of opens of a relational space");
  omega->add_option("space", path)->required();

  auto* points = app.add_subcommand("points", "Point space of a modal frame");
  points->add_option("frame", path)->required();
  points->add_option("--mode", mode)->required();
  points->add_option("--emit", emit, "Also write the point space to this file");
  points->add_flag("--trace-pruning", trace);

  auto* check = app.add_subcommand("check", "Run a verification over frames and spaces");
  check->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"spatial", "sober", "triangles", "adjunction", "duality", "correspondence"}));
  check->add_option("inputs", inputs, "Files or directories")->required();
  check->add_option("--mode", mode)->required();

  auto* modelcheck = app.add_subcommand("modelcheck", "Evaluate a formula on a space");
  modelcheck->add_option("space", path)->required();
  modelcheck->add_option("--valuation", valuation)->required();
  modelcheck->add_option("--formula", formula)->required();
  modelcheck->add_option("--point", point);
  modelcheck->add_flag("--no-imp", no_imp, "Reject implication");

  auto* bisim = app.add_subcommand("bisim", "Check formula transfer along a space morphism");
  bisim->add_option("source", path)->required();
  bisim->add_option("target", path2)->required();
  bisim->add_option("--map", map)->required();
  bisim->add_option("--valuations", valuations)->required();
  bisim->add_option("--depth", depth)->capture_default_str();
  bisim->add_flag("--no-imp", no_imp, "Reject implication");

  auto* idl = app.add_subcommand("idl", "Ideal completion of a modal lattice");
  idl->add_option("frame", path)->required();

  auto* sweep = app.add_subcommand("sweep", "Exhaustive invariant sweep over small structures");
  sweep->add_option("--lattices", lattices, "Max lattice size")->capture_default_str();
  sweep->add_option("--spaces", spaces, "Max space size")->capture_default_str();
  sweep->add_option("--modes", modes)->capture_default_str();


  Json doc;
  try {
    app.parse(argc, argv);
    if (*validate) {
      doc = api::validate(read_json_file(path));
    } else if (*omega) {
      doc = api::omega(read_json_file(path));
    } else if (*points) {
      doc = api::points(read_json_file(path), mode, trace);
      if (!emit.empty()) write_json_file(emit, doc["space"]);
    } else if (*check) {
      doc = api::check(kind, mode, load_inputs(inputs));
    } else if (*modelcheck) {
      doc = api::modelcheck(read_json_file(path), read_json_file(valuation), formula, point, !no_imp);
    } else if (*bisim) {
      doc = api::bisim(read_json_file(path), read_json_file(path2), read_json_file(map),
                       read_json_file(valuations), depth, !no_imp);
    } else if (*idl) {
      doc = api::idl(read_json_file(path));
    } else if (*sweep) {
      doc = api::sweep(lattices, spaces, modes);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    doc = Json{{"error", to_json(e)}};
    if (!human) err << "error: " << e.what() << "\n";
    if (human)
      out << api::render_human(doc);
    else
      out << doc.dump(2) << "\n";
    return 2;
  }
  if (human)
    out << api::render_human(doc);
  else
    out << doc.dump(2) << "\n";
  return api::exit_code(doc);
}

}  // namespace mdual
