// Copyright 2026 The streamcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "streamcut/graph.hpp"
#include "streamcut/metrics.hpp"
#include "streamcut/partition.hpp"
#include "streamcut/report.hpp"
#include "streamcut/synthgen.hpp"

namespace py = pybind11;
using namespace streamcut;

namespace {

Algorithm algorithm_arg(const std::string& name) {
  if (auto a = parse_algorithm(name)) return *a;
  throw py::value_error("unknown algorithm: " + name);
}

OrderKind order_arg(const std::string& name) {
  if (auto o = parse_order(name)) return *o;
  throw py::value_error("unknown order: " + name);
}

struct PartitionRun {
  std::uint32_t partitions;
  double replication_factor;
  double imbalance_factor;
  std::vector<std::uint64_t> edge_counts;
  // (source, target, partition) in external ids, assignment order.
  std::vector<std::tuple<std::uint64_t, std::uint64_t, PartitionId>> assignments;
};

PartitionRun partition(const Graph& graph, const std::string& algorithm,
                       const std::string& order, std::uint32_t partitions, std::uint64_t seed) {
  if (graph.empty()) throw py::value_error("graph has no edges");
  if (partitions == 0) throw py::value_error("partitions must be positive");
  const OrderKind kind = order_arg(order);
  const Algorithm alg = algorithm_arg(algorithm);
  const RunResult run = [&] {
    py::gil_scoped_release release;
    return run_partition(graph, {kind, seed}, alg, partitions, seed);
  }();
  PartitionRun out;
  out.partitions = partitions;
  out.replication_factor = replication_factor(run.state);
  out.imbalance_factor = imbalance_factor(run.state);
  out.edge_counts.assign(run.state.edge_counts().begin(), run.state.edge_counts().end());
  out.assignments.reserve(run.log.size());
  for (const auto& a : run.log) {
    out.assignments.emplace_back(graph.external_id(a.edge.source),
                                 graph.external_id(a.edge.target), a.partition);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Streaming vertex-cut graph partitioning";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
             std::vector<Edge> list;
             list.reserve(edges.size());
             for (const auto& [u, v] : edges) list.push_back({u, v});
             return Graph(n, std::move(list));
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
             out.reserve(g.edge_count());
             for (const Edge& e : g.edges()) {
               out.emplace_back(g.external_id(e.source), g.external_id(e.target));
             }
             return out;
           },
           "Edges as (source, target) pairs of external ids.")
      .def("out_degree", &Graph::out_degree)
      .def("in_degree", &Graph::in_degree)
      .def("total_degree", &Graph::total_degree)
      .def("to_edge_list",
           [](const Graph& g) {
             std::ostringstream out;
             write_edge_list(out, g);
             return out.str();
           })
      .def("__len__", &Graph::edge_count);

  m.def("parse_edge_list", [](const std::string& text) { return load_edge_list(text); },
        py::arg("text"));
  m.def("load_edge_list", [](const std::string& path) { return load_edge_list_file(path); },
        py::arg("path"));

  m.def(
      "generate",
      [](VertexId n, double alpha, double beta, std::uint64_t max_degree, std::uint64_t seed) {
        SyntheticSpec spec{.vertex_count = n, .alpha = alpha, .beta = beta,
                           .max_degree = max_degree, .seed = seed};
        py::gil_scoped_release release;
        return generate(spec);
      },
      py::arg("vertex_count"), py::arg("alpha") = 2.2, py::arg("beta") = 2.2,
      py::arg("max_degree") = 0, py::arg("seed") = 1,
      "Synthetic power-law graph; max_degree 0 means vertex_count - 1.");

  py::class_<PartitionRun>(m, "PartitionRun")
      .def_readonly("partitions", &PartitionRun::partitions)
      .def_readonly("replication_factor", &PartitionRun::replication_factor)
      .def_readonly("imbalance_factor", &PartitionRun::imbalance_factor)
      .def_readonly("edge_counts", &PartitionRun::edge_counts)
      .def_readonly("assignments", &PartitionRun::assignments);

  m.def("partition", &partition, py::arg("graph"), py::arg("algorithm") = "degree-io",
        py::arg("order") = "rnd", py::arg("partitions") = 48, py::arg("seed") = 1);

  m.def("predict_random", &predict_random, py::arg("graph"), py::arg("partitions"));
  m.def("predict_random_degree", &predict_random_degree, py::arg("graph"),
        py::arg("partitions"));
  m.def("improvement", &improvement, py::arg("baseline_lambda"), py::arg("algorithm_lambda"));

  m.attr("ALGORITHMS") = py::make_tuple("random", "grid", "balance", "random-degree", "degree",
                                        "degree-io");
  m.attr("ORDERS") = py::make_tuple("rnd", "bfs", "dfs");
}
