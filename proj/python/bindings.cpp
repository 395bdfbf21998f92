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

// Thin layer over mdual::api; documents cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdual/api.hpp"
#include "mdual/error.hpp"
#include "mdual/io.hpp"

namespace py = pybind11;

namespace {

mdual::Json parse(const std::string& text) { return mdual::parse_json(text); }

}  // namespace

PYBIND11_MODULE(_mdual, m) {
  m.doc() = "Finite modal duality checks";

  // The exception argument is the error document as JSON text.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::exception<mdual::Error>(m, "Error", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mdual::Error& e) {
      py::set_error(error.get_stored(), py::str(mdual::to_json(e).dump()));
    }
  });

  m.def("validate", [](const std::string& doc) { return mdual::api::validate(parse(doc)).dump(); });
  m.def("omega", [](const std::string& space) { return mdual::api::omega(parse(space)).dump(); });
  m.def(
      "points",
      [](const std::string& frame, const std::string& mode, bool trace) {
        return mdual::api::points(parse(frame), mode, trace).dump();
      },
      py::arg("frame"), py::arg("mode"), py::arg("trace") = false);
  m.def("check", [](const std::string& kind, const std::string& mode,
                    const std::vector<std::pair<std::string, std::string>>& inputs) {
    std::vector<mdual::api::Named> named;
    for (const auto& [name, text] : inputs) named.emplace_back(name, parse(text));
    return mdual::api::check(kind, mode, named).dump();
  });
  m.def(
      "modelcheck",
      [](const std::string& space, const std::string& valuation, const std::string& formula,
         std::optional<std::string> point, bool allow_implication) {
        return mdual::api::modelcheck(parse(space), parse(valuation), formula, point,
                                      allow_implication)
            .dump();
      },
      py::arg("space"), py::arg("valuation"), py::arg("formula"), py::arg("point") = py::none(),
      py::arg("allow_implication") = true);
  m.def(
      "bisim",
      [](const std::string& source, const std::string& target, const std::string& map,
         const std::string& valuations, std::size_t depth, bool allow_implication) {
        return mdual::api::bisim(parse(source), parse(target), parse(map), parse(valuations), depth,
                                 allow_implication)
            .dump();
      },
      py::arg("source"), py::arg("target"), py::arg("map"), py::arg("valuations"),
      py::arg("depth") = 4, py::arg("allow_implication") = true);
  m.def("idl", [](const std::string& frame) { return mdual::api::idl(parse(frame)).dump(); });
  m.def(
      "sweep",
      [](std::size_t lattices, std::size_t spaces, const std::vector<std::string>& modes) {
        return mdual::api::sweep(lattices, spaces, modes).dump();
      },
      py::arg("lattices"), py::arg("spaces"), py::arg("modes") = std::vector<std::string>{});
  m.def("render_human", [](const std::string& doc) { return mdual::api::render_human(parse(doc)); });
}
