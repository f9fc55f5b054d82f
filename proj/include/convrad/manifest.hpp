#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convrad/diffmod.hpp"
#include "convrad/graph.hpp"

namespace convrad {

// Parsed manifest: structured text, exact rationals only, unknown keys
// rejected with the offending line number.
struct Manifest {
  std::optional<std::int64_t> prime;
  std::optional<Domain> domain;
  int rank = 0;
  std::vector<std::vector<std::string>> matrix_text;  // entry texts, row-major
  std::vector<Rat> marks;
  // Graph block (optional).
  std::optional<MetrizedGraph> graph;
  std::map<int, Rat> graph_values;           // vertex -> f value
  std::map<int, Rat> graph_boundary_values;  // vertex -> Dirichlet value
  std::vector<std::tuple<int, Rat, Rat>> graph_edge_breaks;  // edge, pos, value
  // Run parameters.
  int order = 16;
  int tail = 8;
  int samples = 33;
  std::vector<std::pair<Rat, Rat>> probes;  // (c, s)
  std::string out_dir;

  DiffModule make_module() const;  // throws when blocks are missing
  Triangulation make_triangulation() const;
  GraphPL make_graph_pl() const;  // from graph_values + edge breaks
  std::string serialize() const;  // round-trips through parse()
};

Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

}  // namespace convrad
