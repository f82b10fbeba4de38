#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bnn/aggregation.hpp"
#include "bnn/bnn.hpp"
#include "bnn/bns_set.hpp"
#include "bnn/error.hpp"
#include "bnn/io.hpp"
#include "bnn/mcdm.hpp"

namespace py = pybind11;

namespace {

bnn::Operator parse_operator(const std::string& name) {
  if (name == "avg" || name == "average") return bnn::Operator::Average;
  if (name == "geo" || name == "geometric") return bnn::Operator::Geometric;
  throw py::value_error("operator must be 'avg' or 'geo'");
}

bnn::BnsSet set_from_mapping(std::vector<std::string> universe,
                             const std::map<std::string, bnn::Bnn>& membership) {
  return bnn::BnsSet(std::move(universe), membership);
}

}  // namespace

PYBIND11_MODULE(pybnn, m) {
  m.doc() = "Bipolar neutrosophic numbers, sets, aggregation operators and ranking";

  static py::exception<bnn::Error> bnn_error(m, "BnnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bnn::Error& e) {
      py::set_error(bnn_error, (std::string("[") + std::string(bnn::to_string(e.kind())) +
                                "] " + e.what())
                                   .c_str());
    }
  });

  py::class_<bnn::Bnn>(m, "Bnn")
      .def(py::init<double, double, double, double, double, double>(), py::arg("t_pos"),
           py::arg("i_pos"), py::arg("f_pos"), py::arg("t_neg"), py::arg("i_neg"),
           py::arg("f_neg"))
      .def_property_readonly("t_pos", &bnn::Bnn::t_pos)
      .def_property_readonly("i_pos", &bnn::Bnn::i_pos)
      .def_property_readonly("f_pos", &bnn::Bnn::f_pos)
      .def_property_readonly("t_neg", &bnn::Bnn::t_neg)
      .def_property_readonly("i_neg", &bnn::Bnn::i_neg)
      .def_property_readonly("f_neg", &bnn::Bnn::f_neg)
      .def("components", [](const bnn::Bnn& a) {
        const auto& c = a.components();
        return py::make_tuple(c[0], c[1], c[2], c[3], c[4], c[5]);
      })
      .def(py::self == py::self)
      .def("__repr__", [](const bnn::Bnn& a) { return "Bnn" + bnn::to_string(a, 6); })
      .def("format", [](const bnn::Bnn& a, int precision) { return bnn::to_string(a, precision); },
           py::arg("precision") = 3);

  m.def("parse_bnn", &bnn::parse_bnn);
  m.def("scale", &bnn::scale, py::arg("lam"), py::arg("a"));
  m.def("power", &bnn::power, py::arg("a"), py::arg("lam"));
  m.def("add", &bnn::add);
  m.def("multiply", &bnn::multiply);
  m.def("score", &bnn::score);
  m.def("accuracy", &bnn::accuracy);
  m.def("certainty", &bnn::certainty);
  m.def("element_complement", &bnn::element_complement);
  m.def(
      "compare",
      [](const bnn::Bnn& a, const bnn::Bnn& b, double tol) {
        return std::string(bnn::to_string(bnn::compare(a, b, tol)));
      },
      py::arg("a"), py::arg("b"), py::arg("tie_tolerance") = bnn::kDefaultTieTolerance,
      "Returns 'Greater', 'Less' or 'Equal'.");

  py::class_<bnn::BnsSet>(m, "BnsSet")
      .def(py::init(&set_from_mapping), py::arg("universe"), py::arg("membership"))
      .def_property_readonly("universe", &bnn::BnsSet::universe)
      .def("__getitem__", &bnn::BnsSet::at)
      .def("__len__", &bnn::BnsSet::size)
      .def(py::self == py::self);
  m.def("union", &bnn::set_union);
  m.def("intersection", &bnn::set_intersection);
  m.def("complement", &bnn::complement);
  m.def("is_subset", &bnn::is_subset);
  m.def("set_equals", &bnn::set_equals);
  m.def("parse_set_json", &bnn::parse_set_json);
  m.def("render_set_json", &bnn::render_set_json);

  py::class_<bnn::WeightVector>(m, "WeightVector")
      .def(py::init([](std::vector<double> w, bool normalize) {
             return bnn::make_weights(std::move(w), normalize);
           }),
           py::arg("weights"), py::arg("normalize") = false)
      .def("values", [](const bnn::WeightVector& w) {
        return std::vector<double>(w.values().begin(), w.values().end());
      });

  m.def("weighted_average", [](const std::vector<bnn::Bnn>& items, const bnn::WeightVector& w) {
    return bnn::weighted_average(items, w);
  });
  m.def("weighted_geometric", [](const std::vector<bnn::Bnn>& items, const bnn::WeightVector& w) {
    return bnn::weighted_geometric(items, w);
  });

  py::class_<bnn::DecisionProblem>(m, "DecisionProblem")
      .def_property_readonly("alternatives", &bnn::DecisionProblem::alternatives)
      .def_property_readonly("criteria", &bnn::DecisionProblem::criteria)
      .def_property_readonly("matrix", &bnn::DecisionProblem::matrix)
      .def_property_readonly("weights", [](const bnn::DecisionProblem& p) {
        return std::vector<double>(p.weights().values().begin(), p.weights().values().end());
      })
      .def(py::self == py::self);

  m.def(
      "parse_problem_json",
      [](const std::string& text, bool normalize) {
        return bnn::parse_problem_json(text, {.normalize_weights = normalize});
      },
      py::arg("text"), py::arg("normalize_weights") = false);
  m.def(
      "parse_problem_csv",
      [](const std::string& text, bool normalize) {
        return bnn::parse_problem_csv(text, {.normalize_weights = normalize});
      },
      py::arg("text"), py::arg("normalize_weights") = false);
  m.def("render_problem_json", &bnn::render_problem_json);
  m.def("render_problem_csv", &bnn::render_problem_csv);

  m.def(
      "aggregate_rows",
      [](const bnn::DecisionProblem& p, const std::string& op) {
        return bnn::aggregate_rows(p, parse_operator(op));
      },
      py::arg("problem"), py::arg("operator") = "avg");

  py::class_<bnn::RankedAlternative>(m, "RankedAlternative")
      .def_readonly("label", &bnn::RankedAlternative::label)
      .def_readonly("aggregate", &bnn::RankedAlternative::aggregate)
      .def_readonly("score", &bnn::RankedAlternative::score)
      .def_readonly("accuracy", &bnn::RankedAlternative::accuracy)
      .def_readonly("certainty", &bnn::RankedAlternative::certainty)
      .def_readonly("rank", &bnn::RankedAlternative::rank);

  py::class_<bnn::RankingReport>(m, "RankingReport")
      .def_readonly("alternatives", &bnn::RankingReport::alternatives)
      .def_property_readonly("ordering", &bnn::RankingReport::ordering_string)
      .def_property_readonly("operator", [](const bnn::RankingReport& r) {
        return std::string(bnn::to_string(r.operator_used));
      })
      .def(
          "render",
          [](const bnn::RankingReport& r, const std::string& style, int precision) {
            if (style != "table" && style != "json") {
              throw py::value_error("style must be 'table' or 'json'");
            }
            return bnn::render_report(
                r, style == "json" ? bnn::ReportStyle::Json : bnn::ReportStyle::Table,
                precision);
          },
          py::arg("style") = "table", py::arg("precision") = bnn::kDefaultPrecision);

  m.def(
      "rank",
      [](const bnn::DecisionProblem& p, const std::string& op, double tol) {
        return bnn::rank(p, parse_operator(op), tol);
      },
      py::arg("problem"), py::arg("operator") = "avg",
      py::arg("tie_tolerance") = bnn::kDefaultTieTolerance);
}
