#include "convrad/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace convrad {

int MetrizedGraph::add_vertex(const std::string& name, bool boundary) {
  if (vertex_index(name) >= 0)
    throw std::invalid_argument("duplicate vertex: " + name);
  vertices_.push_back({name, boundary});
  return static_cast<int>(vertices_.size()) - 1;
}

int MetrizedGraph::add_edge(int u, int v, const Rat& length, int weight_u,
                            int weight_v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(vertices_.size()) ||
      v >= static_cast<int>(vertices_.size()))
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops not supported");
  if (length <= 0) throw std::invalid_argument("edge length must be positive");
  if (weight_u < 1 || weight_v < 1)
    throw std::invalid_argument("direction weights must be positive integers");
  edges_.push_back({u, v, length, weight_u, weight_v});
  return static_cast<int>(edges_.size()) - 1;
}

int MetrizedGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> MetrizedGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].u == v || edges_[e].v == v) out.push_back(static_cast<int>(e));
  return out;
}

bool MetrizedGraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident_edges(v)) {
      int w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GraphPL GraphPL::linear(const MetrizedGraph& g, std::vector<Rat> values) {
  if (values.size() != g.vertices().size())
    throw std::invalid_argument("value count mismatch");
  GraphPL f;
  f.vertex_values = std::move(values);
  f.edge_breaks.resize(g.edges().size());
  return f;
}

void GraphPL::validate(const MetrizedGraph& g) const {
  if (vertex_values.size() != g.vertices().size() ||
      edge_breaks.size() != g.edges().size())
    throw std::invalid_argument("function/graph shape mismatch");
  for (std::size_t e = 0; e < edge_breaks.size(); ++e) {
    const Rat& len = g.edges()[e].length;
    Rat prev(0);
    for (const auto& b : edge_breaks[e]) {
      if (!(b.pos > prev) || !(b.pos < len))
        throw std::invalid_argument("edge breakpoint out of order or range");
      prev = b.pos;
    }
  }
}

Rat GraphPL::eval_on_edge(const MetrizedGraph& g, int edge, const Rat& pos) const {
  const auto& ed = g.edges()[edge];
  if (pos < 0 || pos > ed.length) throw std::domain_error("position outside edge");
  // Piecewise nodes along the edge: (0, f(u)), breaks, (len, f(v)).
  Rat x0(0), v0 = vertex_values[ed.u];
  for (const auto& b : edge_breaks[edge]) {
    if (pos <= b.pos)
      return v0 + (b.value - v0) * (pos - x0) / (b.pos - x0);
    x0 = b.pos;
    v0 = b.value;
  }
  const Rat& x1 = ed.length;
  const Rat& v1 = vertex_values[ed.v];
  return v0 + (v1 - v0) * (pos - x0) / (x1 - x0);
}

std::string Location::str(const MetrizedGraph& g) const {
  if (vertex >= 0) return g.vertices()[vertex].name;
  const auto& e = g.edges()[edge];
  return g.vertices()[e.u].name + "-" + g.vertices()[e.v].name + "@" + rat_str(pos);
}

Rat PointMeasure::total() const {
  Rat t(0);
  for (const auto& [loc, m] : atoms) t += m;
  return t;
}

namespace {

// Node chain of an edge including its ends: positions and values.
struct EdgeChain {
  std::vector<Rat> pos, val;
};

EdgeChain chain_of(const MetrizedGraph& g, const GraphPL& f, int e) {
  const auto& ed = g.edges()[e];
  EdgeChain c;
  c.pos.push_back(Rat(0));
  c.val.push_back(f.vertex_values[ed.u]);
  for (const auto& b : f.edge_breaks[e]) {
    c.pos.push_back(b.pos);
    c.val.push_back(b.value);
  }
  c.pos.push_back(ed.length);
  c.val.push_back(f.vertex_values[ed.v]);
  return c;
}

}  // namespace

PointMeasure laplacian(const MetrizedGraph& g, const GraphPL& f) {
  f.validate(g);
  std::vector<Rat> vertex_mass(g.vertices().size(), Rat(0));
  PointMeasure out;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    EdgeChain c = chain_of(g, f, static_cast<int>(e));
    std::size_t k = c.pos.size();
    // Outgoing slope from the u end.
    vertex_mass[ed.u] +=
        Rat(ed.weight_u) * (c.val[1] - c.val[0]) / (c.pos[1] - c.pos[0]);
    vertex_mass[ed.v] += Rat(ed.weight_v) * (c.val[k - 2] - c.val[k - 1]) /
                         (c.pos[k - 1] - c.pos[k - 2]);
    for (std::size_t i = 1; i + 1 < k; ++i) {
      // Direction weights are constant along each side of the edge, so an
      // interior kink weighs its u-facing slope by weight_u and its
      // v-facing slope by weight_v; the per-edge total then telescopes to 0.
      Rat mass =
          Rat(ed.weight_u) * (c.val[i - 1] - c.val[i]) / (c.pos[i] - c.pos[i - 1]) +
          Rat(ed.weight_v) * (c.val[i + 1] - c.val[i]) / (c.pos[i + 1] - c.pos[i]);
      if (mass != 0)
        out.atoms.push_back({Location{-1, static_cast<int>(e), c.pos[i]}, mass});
    }
  }
  for (std::size_t v = 0; v < vertex_mass.size(); ++v)
    if (vertex_mass[v] != 0)
      out.atoms.push_back({Location{static_cast<int>(v), -1, Rat(0)}, vertex_mass[v]});
  return out;
}

Harmonicity classify(const MetrizedGraph& g, const GraphPL& f, bool interior_only) {
  PointMeasure mu = laplacian(g, f);
  bool has_pos = false, has_neg = false;
  for (const auto& [loc, m] : mu.atoms) {
    if (interior_only && loc.vertex >= 0 && g.vertices()[loc.vertex].boundary)
      continue;
    if (m > 0) has_pos = true;
    if (m < 0) has_neg = true;
  }
  if (!has_pos && !has_neg) return Harmonicity::Harmonic;
  if (!has_pos) return Harmonicity::Superharmonic;
  if (!has_neg) return Harmonicity::Subharmonic;
  return Harmonicity::Neither;
}

GraphPL dirichlet_solve(const MetrizedGraph& g, const std::map<int, Rat>& boundary_values) {
  const int nv = static_cast<int>(g.vertices().size());
  std::vector<int> unknown_index(nv, -1);
  std::vector<int> unknowns;
  for (int v = 0; v < nv; ++v) {
    if (g.vertices()[v].boundary) {
      if (!boundary_values.count(v))
        throw std::invalid_argument("missing boundary value for vertex " +
                                    g.vertices()[v].name);
    } else {
      unknown_index[v] = static_cast<int>(unknowns.size());
      unknowns.push_back(v);
    }
  }
  // Every component needs at least one boundary vertex; reached unknowns
  // from boundary via edges certify well-posedness.
  {
    std::vector<bool> reached(nv, false);
    std::vector<int> stack;
    for (int v = 0; v < nv; ++v)
      if (g.vertices()[v].boundary) {
        reached[v] = true;
        stack.push_back(v);
      }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident_edges(v)) {
        int w = g.edges()[e].u == v ? g.edges()[e].v : g.edges()[e].u;
        if (!reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (int v : unknowns)
      if (!reached[v]) throw std::invalid_argument("ill-posed Dirichlet problem");
  }

  const int n = static_cast<int>(unknowns.size());
  // Weighted combinatorial Laplacian rows: for interior v,
  // sum_e m_{v,e} (f(w) - f(v)) / len_e = 0.
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    int v = unknowns[i];
    for (int e : g.incident_edges(v)) {
      const auto& ed = g.edges()[e];
      int w = ed.u == v ? ed.v : ed.u;
      Rat cond = Rat(ed.u == v ? ed.weight_u : ed.weight_v) / ed.length;
      A[i][i] -= cond;
      if (unknown_index[w] >= 0)
        A[i][unknown_index[w]] += cond;
      else
        A[i][n] -= cond * boundary_values.at(w);
    }
  }
  // Exact Gaussian elimination.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular Dirichlet system");
    std::swap(A[col], A[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat factor = A[r][col] / A[col][col];
      for (int cc = col; cc <= n; ++cc) A[r][cc] -= factor * A[col][cc];
    }
  }
  std::vector<Rat> values(nv);
  for (const auto& [v, val] : boundary_values) values[v] = val;
  for (int i = 0; i < n; ++i) values[unknowns[i]] = A[i][n] / A[i][i];
  return GraphPL::linear(g, std::move(values));
}

Rat pairing(const MetrizedGraph& g, const GraphPL& f, const GraphPL& h) {
  h.validate(g);
  PointMeasure mu = laplacian(g, f);
  Rat acc(0);
  for (const auto& [loc, m] : mu.atoms) {
    Rat hv = loc.vertex >= 0 ? h.vertex_values[loc.vertex]
                             : h.eval_on_edge(g, loc.edge, loc.pos);
    acc += m * hv;
  }
  return acc;
}

long direction_count_bound(const Rat& p1, const Rat& p2, const Rat& m) {
  if (m <= 0) throw std::invalid_argument("invalid slope threshold");
  Rat bound = -(p1 + p2) / m;
  if (bound <= 0) return 0;
  return static_cast<long>(numerator(rat_floor(bound)));
}

GraphPL pointwise_min(const MetrizedGraph& g, const GraphPL& f, const GraphPL& h) {
  f.validate(g);
  h.validate(g);
  GraphPL out;
  out.vertex_values.resize(g.vertices().size());
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out.vertex_values[v] = std::min(f.vertex_values[v], h.vertex_values[v]);
  out.edge_breaks.resize(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    std::vector<Rat> cuts;
    for (const auto& b : f.edge_breaks[e]) cuts.push_back(b.pos);
    for (const auto& b : h.edge_breaks[e]) cuts.push_back(b.pos);
    // Crossings between segments of f and h: scan pairwise over the
    // refined chain, solving exactly within each cell.
    std::vector<Rat> cells = cuts;
    cells.push_back(Rat(0));
    cells.push_back(ed.length);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const Rat &a = cells[i], &b = cells[i + 1];
      Rat fa = f.eval_on_edge(g, static_cast<int>(e), a);
      Rat fb = f.eval_on_edge(g, static_cast<int>(e), b);
      Rat ha = h.eval_on_edge(g, static_cast<int>(e), a);
      Rat hb = h.eval_on_edge(g, static_cast<int>(e), b);
      Rat sf = (fb - fa) / (b - a), sh = (hb - ha) / (b - a);
      if (sf == sh) continue;
      Rat x = a + (ha - fa) / (sf - sh);
      if (x > a && x < b) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const Rat& x : cuts) {
      if (!(x > 0 && x < ed.length)) continue;
      Rat v = std::min(f.eval_on_edge(g, static_cast<int>(e), x),
                       h.eval_on_edge(g, static_cast<int>(e), x));
      out.edge_breaks[e].push_back({x, v});
    }
  }
  return out;
}

}  // namespace convrad
