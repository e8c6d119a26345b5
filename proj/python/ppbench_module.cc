// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the main operations. Tables cross the boundary as
// opaque objects; results come back as plain Python values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <string>
#include <vector>

#include "ppbench/anonymizer.h"
#include "ppbench/dp.h"
#include "ppbench/error.h"
#include "ppbench/experiment.h"
#include "ppbench/io.h"
#include "ppbench/metrics.h"
#include "ppbench/stats.h"
#include "ppbench/synthesizer.h"
#include "ppbench/tradeoff.h"

namespace py = pybind11;
using namespace ppbench;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<py::object> column_values(const Table& t, const std::string& name) {
  const std::size_t c = t.schema().require(name);
  const ColumnSpec& spec = t.schema().column(c);
  std::vector<py::object> out;
  out.reserve(t.num_rows());
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (spec.is_categorical()) {
      out.push_back(py::str(spec.categories[t.category(r, c)]));
    } else {
      out.push_back(py::float_(t.at(r, c)));
    }
  }
  return out;
}

Table table_from_csv(const std::string& csv_text, const std::string& schema_json) {
  std::istringstream in(csv_text);
  return parse_csv(in, schema_from_json(nlohmann::json::parse(schema_json)));
}

}  // namespace

PYBIND11_MODULE(_ppbench, m) {
  m.doc() = "Privacy-utility benchmark for tabular data release";

  py::register_exception<Error>(m, "PpbenchError", PyExc_RuntimeError);

  py::class_<Table>(m, "Table")
      .def_property_readonly("num_rows", &Table::num_rows)
      .def_property_readonly("num_columns", &Table::num_columns)
      .def_property_readonly("column_names",
                             [](const Table& t) {
                               std::vector<std::string> names;
                               for (const ColumnSpec& c : t.schema().columns()) names.push_back(c.name);
                               return names;
                             })
      .def("column", &column_values, py::arg("name"))
      .def("to_csv", [](const Table& t) { return to_csv(t); })
      .def("__len__", &Table::num_rows)
      .def("__eq__", [](const Table& a, const Table& b) { return a == b; });

  m.def("load_table", &ingest_csv, py::arg("csv_path"), py::arg("schema_path"),
        "Reads a CSV file typed by a JSON schema file.");
  m.def("table_from_csv", &table_from_csv, py::arg("csv_text"), py::arg("schema_json"));

  m.def(
      "nhs_sanitize",
      [](const Table& t, std::size_t k, double cap_quantile,
         std::optional<std::size_t> rare_category_min_count) {
        AnonymizationConfig cfg = AnonymizationConfig::for_k(k, cap_quantile);
        if (rare_category_min_count) cfg.rare_category_min_count = *rare_category_min_count;
        SanitizeResult r = nhs_sanitize(t, cfg);
        return py::make_tuple(r.table, json_to_py(r.log.to_json()));
      },
      py::arg("table"), py::arg("k"), py::arg("cap_quantile") = 0.95,
      py::arg("rare_category_min_count") = py::none(),
      "Suppression-only k-anonymization; returns (table, log).");
  m.def(
      "is_k_anonymous",
      [](const Table& t, std::size_t k) { return verify_k_anonymity(t, k).k_anonymous; },
      py::arg("table"), py::arg("k"));

  m.def(
      "synthesize",
      [](const Table& t, const std::string& method, int bins, double epsilon, int max_parents,
         std::uint64_t seed, std::optional<std::size_t> n_out) {
        GeneratorConfig cfg;
        cfg.method = parse_synth_method(method);
        cfg.bins = bins;
        cfg.epsilon = epsilon;
        cfg.max_parents = max_parents;
        cfg.seed = seed;
        return synthesize(t, cfg, n_out.value_or(t.num_rows()));
      },
      py::arg("table"), py::arg("method"), py::arg("bins") = 10, py::arg("epsilon") = 1.0,
      py::arg("max_parents") = 2, py::arg("seed") = 0, py::arg("n_out") = py::none(),
      "Fits IndHist, BayNet or PrivBayes and samples a synthetic table.");

  m.def(
      "statistical_utility",
      [](const Table& seed, const Table& published) {
        const UtilityReport r = statistical_utility(seed, published);
        py::dict per_column;
        for (const ColumnScore& c : r.per_column) per_column[py::str(c.column)] = c.score;
        return py::make_tuple(r.aggregate_stat, per_column);
      },
      py::arg("seed"), py::arg("published"));
  m.def(
      "ml_utility",
      [](const Table& published, const Table& test, int n_trees, std::uint64_t seed) {
        ForestConfig cfg;
        cfg.n_trees = n_trees;
        cfg.seed = seed;
        return ml_utility(published, test, cfg);
      },
      py::arg("published"), py::arg("test"), py::arg("n_trees") = 100, py::arg("seed") = 0);
  m.def("ks_statistic",
        [](std::vector<double> a, std::vector<double> b) { return ks_statistic(a, b); });
  m.def("total_variation", &total_variation, py::arg("a"), py::arg("b"));

  m.def(
      "laplace_samples",
      [](double scale, std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<double> out(n);
        for (double& x : out) x = laplace_noise(rng, scale);
        return out;
      },
      py::arg("scale"), py::arg("n"), py::arg("seed") = 0);

  m.def(
      "find_outliers",
      [](const Table& t, std::size_t top_n) {
        std::vector<std::size_t> rows;
        for (const OutlierEntry& e : find_outliers(t, top_n).entries) rows.push_back(e.row);
        return rows;
      },
      py::arg("table"), py::arg("top_n"));

  m.def(
      "run_experiment",
      [](const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
         std::optional<std::uint64_t> seed, std::optional<std::size_t> workers) {
        ExperimentConfig cfg = ExperimentConfig::load(config_path);
        if (seed) cfg.master_seed = *seed;
        if (workers) cfg.workers = *workers;
        ExperimentResults results;
        {
          py::gil_scoped_release release;
          results = run_experiment(cfg);
        }
        results.write(out_dir);
        return results.results_csv();
      },
      py::arg("config_path"), py::arg("out_dir"), py::arg("seed") = py::none(),
      py::arg("workers") = py::none(),
      "Runs a sweep, writes its outputs to out_dir and returns the results CSV text.");
  m.def(
      "tradeoff",
      [](const std::string& results_csv) {
        return json_to_py(tradeoff_json(tradeoff_points_from_csv(results_csv)));
      },
      py::arg("results_csv"), "Trade-off JSON (as a dict) for a results CSV.");
}
