#pragma once

#include <map>
#include <string>
#include <vector>

#include "convrad/rational.hpp"

namespace convrad {

// Finite metrized graph with boundary flags and per-end direction
// weights (default 1).
class MetrizedGraph {
 public:
  struct Vertex {
    std::string name;
    bool boundary = false;
  };
  struct Edge {
    int u = 0, v = 0;
    Rat length;
    int weight_u = 1, weight_v = 1;
  };

  int add_vertex(const std::string& name, bool boundary = false);
  int add_edge(int u, int v, const Rat& length, int weight_u = 1, int weight_v = 1);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_index(const std::string& name) const;  // -1 when absent
  std::vector<int> incident_edges(int v) const;
  bool connected() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Continuous PL function on a metrized graph: rational vertex values plus
// per-edge interior breakpoints (position measured from the u end).
struct GraphPL {
  struct Break {
    Rat pos;  // in (0, length)
    Rat value;
  };
  std::vector<Rat> vertex_values;
  std::vector<std::vector<Break>> edge_breaks;  // one list per edge, sorted

  static GraphPL linear(const MetrizedGraph& g, std::vector<Rat> values);
  Rat eval_on_edge(const MetrizedGraph& g, int edge, const Rat& pos) const;
  void validate(const MetrizedGraph& g) const;
};

// A vertex or an edge-interior point.
struct Location {
  int vertex = -1;
  int edge = -1;
  Rat pos;
  friend bool operator==(const Location&, const Location&) = default;
  std::string str(const MetrizedGraph& g) const;
};

// Finite signed measure supported on vertices and edge-interior
// breakpoints; zero masses removed.
struct PointMeasure {
  std::vector<std::pair<Location, Rat>> atoms;
  Rat total() const;
};

// dd^c(f): at every vertex and edge-interior breakpoint, the weighted sum
// of outgoing slopes (outgoing positive when f increases away from the
// point). Interior edge points weigh each direction by the weight of the
// edge end it faces, so the total mass vanishes edge by edge.
PointMeasure laplacian(const MetrizedGraph& g, const GraphPL& f);

enum class Harmonicity { Harmonic, Superharmonic, Subharmonic, Neither };

// Classification over interior masses (boundary vertices ignored unless
// interior_only is false). A constant counts as harmonic.
Harmonicity classify(const MetrizedGraph& g, const GraphPL& f,
                     bool interior_only = true);

// Unique edge-linear function matching the boundary values with zero
// Laplacian at every interior vertex; exact rational solve.
GraphPL dirichlet_solve(const MetrizedGraph& g, const std::map<int, Rat>& boundary_values);

// <dd^c(f), h>.
Rat pairing(const MetrizedGraph& g, const GraphPL& f, const GraphPL& h);

// floor(max(0, -(p1+p2)/m)): the largest number of off-skeleton directions
// of slope >= m a super-harmonic function can carry at a point whose two
// skeleton slopes are p1, p2.
long direction_count_bound(const Rat& p1, const Rat& p2, const Rat& m);

// Pointwise min with exact crossing refinement along edges.
GraphPL pointwise_min(const MetrizedGraph& g, const GraphPL& f, const GraphPL& h);

}  // namespace convrad
