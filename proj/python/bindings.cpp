#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "nbhd/decide.hpp"
#include "nbhd/error.hpp"
#include "nbhd/filtration.hpp"
#include "nbhd/io.hpp"
#include "nbhd/suites.hpp"
#include "nbhd/transform.hpp"

namespace py = pybind11;
using namespace nbhd;

namespace {

using Bits = Subset::Bits;

Frame frame_from_list(int worlds, const std::vector<Bits>& table) { return validate_frame(worlds, table); }

std::vector<Bits> table_bits(const Frame& f) {
  std::vector<Bits> out;
  out.reserve(f.subset_count());
  for (const Subset s : f.table()) out.push_back(s.bits());
  return out;
}

Valuation valuation_from(const std::map<std::string, Bits>& v) {
  Valuation out;
  for (const auto& [name, bits] : v) out.emplace(name, Subset(bits));
  return out;
}

std::map<std::string, Bits> valuation_bits(const Model& m) {
  std::map<std::string, Bits> out;
  for (const auto& [name, value] : m.valuation()) out.emplace(name, value.bits());
  return out;
}

std::vector<std::string> rendered(const SigmaSet& s) {
  std::vector<std::string> out;
  for (const auto& f : s) out.push_back(render(f));
  return out;
}

py::dict report_dict(const FiltrationReport& report) {
  py::list checks;
  for (const auto& c : report.checks) {
    py::dict row;
    row["clause"] = std::string(to_string(c.clause));
    row["passed"] = c.passed;
    row["formula"] = c.formula ? py::cast(render(*c.formula)) : py::none();
    row["detail"] = c.detail;
    checks.append(row);
  }
  py::dict out;
  out["passed"] = report.passed();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite neighborhood frames: evaluation, closure operators, filtrations and bounded search";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<FrameError>(m, "FrameError", error);
  py::register_exception<GuardError>(m, "GuardError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<FormatError>(m, "FormatError", error);
  py::register_exception<ConfigError>(m, "ConfigError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  py::class_<Formula>(m, "Formula")
      .def_property_readonly("kind",
                             [](const Formula& f) {
                               switch (f.kind()) {
                                 case Formula::Kind::variable:
                                   return "variable";
                                 case Formula::Kind::negation:
                                   return "negation";
                                 case Formula::Kind::conjunction:
                                   return "conjunction";
                                 case Formula::Kind::box:
                                   return "box";
                               }
                               return "";
                             })
      .def_property_readonly("node_count", &Formula::node_count)
      .def_property_readonly("modal_depth", [](const Formula& f) { return modal_depth(f); })
      .def_property_readonly("variables", [](const Formula& f) { return variables(f); })
      .def("subformulas", [](const Formula& f) { return rendered(subformula_closure(f)); })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return py::hash(py::str(render(f))); });

  m.def("parse", &parse, py::arg("text"), "Parse surface syntax into the core language.");
  m.def("render", &render, py::arg("formula"));
  m.def(
      "is_variable_free", [](const std::string& text) { return is_variable_free(parse_surface(text)); },
      py::arg("text"), "True when the text contains no variable tokens.");

  py::class_<Frame>(m, "Frame")
      .def(py::init(&frame_from_list), py::arg("worlds"), py::arg("box"))
      .def_static("identity", &Frame::identity, py::arg("worlds"))
      .def_static("constant", [](int n, Bits v) { return Frame::constant(n, Subset(v)); }, py::arg("worlds"),
                  py::arg("value"))
      .def_property_readonly("worlds", &Frame::worlds)
      .def_property_readonly("table", &table_bits)
      .def("box", [](const Frame& f, Bits x) {
        if (x >= f.subset_count()) throw FrameError("subset exceeds world range");
        return f.box(Subset(x)).bits();
      })
      .def("neighborhood", [](const Frame& f, int w) {
        std::vector<Bits> out;
        for (const Subset s : f.neighborhood(w)) out.push_back(s.bits());
        return out;
      })
      .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; })
      .def("__repr__", [](const Frame& f) { return "Frame(" + frame_to_json(f) + ")"; });

  py::class_<Model>(m, "Model")
      .def(py::init([](Frame f, const std::map<std::string, Bits>& v) { return Model(std::move(f), valuation_from(v)); }),
           py::arg("frame"), py::arg("valuation") = std::map<std::string, Bits>{})
      .def_property_readonly("frame", &Model::frame)
      .def_property_readonly("worlds", &Model::worlds)
      .def_property_readonly("valuation", &valuation_bits)
      .def("__eq__", [](const Model& a, const Model& b) { return a == b; })
      .def("__repr__", [](const Model& x) { return "Model(" + model_to_json(x) + ")"; });

  m.def("truth_set", [](const Model& x, const Formula& f) { return truth_set(x, f).bits(); });
  m.def("holds_at", &holds_at, py::arg("model"), py::arg("world"), py::arg("formula"));
  m.def("valid_on_frame", &valid_on_frame, py::arg("frame"), py::arg("formula"));
  m.def("is_reflexive", &is_reflexive);
  m.def("is_transitive", &is_transitive);
  m.def("is_monotonic", &is_monotonic);
  m.def("is_regular", &is_regular);
  m.def(
      "satisfies_class", [](const Frame& f, const std::string& c) { return satisfies_class(f, parse_frame_class(c)); },
      py::arg("frame"), py::arg("frame_class"));
  m.def(
      "kripke_to_neighborhood",
      [](int n, const std::vector<std::pair<int, int>>& rel) { return kripke_to_neighborhood(n, rel); },
      py::arg("worlds"), py::arg("relation"));

  m.def("supplement", &supplement);
  m.def("hat_closure", &hat_closure);
  m.def("intersection_closure", &intersection_closure);
  m.def("rm_closure", [](const Frame& f) { return rm_closure(f, Verification::on); });

  m.def(
      "filtrate",
      [](const Model& x, const Formula& f, const std::string& kind) {
        const FiltrationResult fr = filtrate(x, f, parse_filtration_kind(kind));
        py::dict out;
        out["model"] = fr.model;
        std::vector<Bits> classes;
        for (const Subset c : fr.partition.classes()) classes.push_back(c.bits());
        out["partition"] = classes;
        out["sigma"] = rendered(fr.sigma);
        out["kind"] = std::string(to_string(fr.kind));
        out["report"] = report_dict(verify_filtration(x, fr));
        return out;
      },
      py::arg("model"), py::arg("formula"), py::arg("kind") = "minimal",
      "Filtrate through the subformulas of `formula`; the result carries its verification report.");

  m.def(
      "bounded_sat",
      [](const Formula& f, const std::string& c, int max_worlds, std::size_t budget, std::uint64_t seed) {
        SearchConfig cfg;
        cfg.max_worlds = max_worlds;
        cfg.exhaustive_limit = std::min(2, max_worlds);
        cfg.sample_budget = budget;
        cfg.seed = seed;
        const SatResult r = bounded_sat(f, parse_frame_class(c), cfg);
        py::dict out;
        if (r.satisfiable()) {
          out["outcome"] = "satisfiable";
          out["model"] = r.witness().model;
          out["world"] = r.witness().world;
        } else {
          out["outcome"] = "unknown";
          out["max_worlds"] = r.unknown().max_worlds;
          out["frames_examined"] = r.unknown().frames_examined;
          out["frames_in_class"] = r.unknown().frames_in_class;
        }
        return out;
      },
      py::arg("formula"), py::arg("frame_class"), py::arg("max_worlds") = 3, py::arg("budget") = 100000,
      py::arg("seed") = kDefaultSeed);

  m.def("axiom_report", [](const Frame& f) {
    py::list rows;
    for (const auto& row : axiom_report(f).rows) {
      py::dict d;
      d["axiom"] = row.axiom;
      d["formula"] = render(row.formula);
      d["valid"] = row.valid;
      d["property"] = std::string(to_string(row.property));
      d["holds"] = row.holds;
      rows.append(d);
    }
    return rows;
  });

  m.def("model_to_json", &model_to_json);
  m.def("frame_to_json", &frame_to_json);
  m.def("model_from_json", [](const std::string& s) { return model_from_json(s); });
  m.def("frame_from_json", [](const std::string& s) { return frame_from_json(s); });

  m.def(
      "run_lemmas",
      [](const std::string& level, std::uint64_t seed) {
        std::vector<std::pair<bool, std::string>> out;
        for (const auto& r : suites::run_all(suites::parse_level(level), seed)) out.emplace_back(r.passed(), suites::format(r));
        return out;
      },
      py::arg("level") = "quick", py::arg("seed") = kDefaultSeed);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
