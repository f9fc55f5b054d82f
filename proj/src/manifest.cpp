#include "convrad/manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace convrad {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("manifest line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) fail(line, "bad integer '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(line, "bad integer '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(line, "integer out of range '" + s + "'");
  }
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  std::string domain_kind;
  std::optional<Rat> d_s0, d_s1, d_s2;
  MetrizedGraph graph;
  bool has_graph = false;

  std::istringstream is(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header");
      section = s.substr(1, s.size() - 2);
      if (section != "domain" && section != "matrix" && section != "triangulation" &&
          section != "graph" && section != "run")
        fail(line, "unknown section [" + section + "]");
      continue;
    }
    auto eq = s.find('=');
    std::string key = trim(eq == std::string::npos ? s : s.substr(0, eq));
    std::string val = eq == std::string::npos ? "" : trim(s.substr(eq + 1));
    auto keyw = split_ws(key);
    if (keyw.empty()) fail(line, "empty key");

    try {
      if (section.empty()) {
        if (key == "prime")
          m.prime = parse_int(val, line);
        else
          fail(line, "unknown key '" + key + "'");
      } else if (section == "domain") {
        if (key == "kind")
          domain_kind = val;
        else if (key == "s0")
          d_s0 = parse_rat(val);
        else if (key == "s1")
          d_s1 = parse_rat(val);
        else if (key == "s2")
          d_s2 = parse_rat(val);
        else
          fail(line, "unknown key '" + key + "' in [domain]");
      } else if (section == "matrix") {
        if (key == "rank") {
          m.rank = parse_int(val, line);
          if (m.rank < 1) fail(line, "rank must be >= 1");
          m.matrix_text.assign(m.rank, std::vector<std::string>(m.rank, "0"));
        } else if (keyw[0] == "entry") {
          if (keyw.size() != 3) fail(line, "expected 'entry I J = poly'");
          if (m.rank == 0) fail(line, "rank must come before entries");
          int i = parse_int(keyw[1], line), j = parse_int(keyw[2], line);
          if (i < 1 || i > m.rank || j < 1 || j > m.rank)
            fail(line, "entry index out of range");
          LaurentPoly::parse(val);  // validate now, with the line number
          m.matrix_text[i - 1][j - 1] = val;
        } else {
          fail(line, "unknown key '" + key + "' in [matrix]");
        }
      } else if (section == "triangulation") {
        if (key == "marks") {
          for (const auto& tok : split_ws(val)) m.marks.push_back(parse_rat(tok));
        } else {
          fail(line, "unknown key '" + key + "' in [triangulation]");
        }
      } else if (section == "graph") {
        has_graph = true;
        if (keyw[0] == "vertex") {
          if (keyw.size() < 2 || keyw.size() > 3) fail(line, "expected 'vertex NAME [boundary]'");
          bool boundary = keyw.size() == 3;
          if (boundary && keyw[2] != "boundary") fail(line, "expected 'boundary'");
          graph.add_vertex(keyw[1], boundary);
        } else if (keyw[0] == "edge") {
          if (keyw.size() != 4 && keyw.size() != 6)
            fail(line, "expected 'edge U V LENGTH [WU WV]'");
          int u = graph.vertex_index(keyw[1]), v = graph.vertex_index(keyw[2]);
          if (u < 0 || v < 0) fail(line, "unknown vertex in edge");
          int wu = keyw.size() == 6 ? parse_int(keyw[4], line) : 1;
          int wv = keyw.size() == 6 ? parse_int(keyw[5], line) : 1;
          graph.add_edge(u, v, parse_rat(keyw[3]), wu, wv);
        } else if (keyw[0] == "value" || keyw[0] == "boundary") {
          if (keyw.size() != 2) fail(line, "expected '" + keyw[0] + " NAME = RAT'");
          int v = graph.vertex_index(keyw[1]);
          if (v < 0) fail(line, "unknown vertex '" + keyw[1] + "'");
          (keyw[0] == "value" ? m.graph_values : m.graph_boundary_values)[v] =
              parse_rat(val);
        } else if (keyw[0] == "break") {
          if (keyw.size() != 3) fail(line, "expected 'break EDGE POS = RAT'");
          int e = parse_int(keyw[1], line) - 1;
          if (e < 0 || e >= static_cast<int>(graph.edges().size()))
            fail(line, "edge index out of range");
          m.graph_edge_breaks.emplace_back(e, parse_rat(keyw[2]), parse_rat(val));
        } else {
          fail(line, "unknown key '" + key + "' in [graph]");
        }
      } else if (section == "run") {
        if (key == "N")
          m.order = parse_int(val, line);
        else if (key == "J")
          m.tail = parse_int(val, line);
        else if (key == "samples")
          m.samples = parse_int(val, line);
        else if (key == "out")
          m.out_dir = val;
        else if (keyw[0] == "probe") {
          if (keyw.size() != 3) fail(line, "expected 'probe C S'");
          m.probes.emplace_back(parse_rat(keyw[1]), parse_rat(keyw[2]));
        } else {
          fail(line, "unknown key '" + key + "' in [run]");
        }
      }
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.rfind("manifest line", 0) == 0) throw;
      fail(line, what);
    }
  }

  if (!domain_kind.empty()) {
    if (domain_kind == "disc") {
      if (!d_s0) throw std::invalid_argument("manifest: disc requires s0");
      m.domain = Domain::disc(*d_s0);
    } else if (domain_kind == "annulus") {
      if (!d_s1 || !d_s2) throw std::invalid_argument("manifest: annulus requires s1, s2");
      m.domain = Domain::annulus(*d_s1, *d_s2);
    } else {
      throw std::invalid_argument("manifest: unknown domain kind '" + domain_kind + "'");
    }
  }
  if (has_graph) m.graph = std::move(graph);
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

DiffModule Manifest::make_module() const {
  if (!prime) throw std::invalid_argument("manifest: missing prime");
  if (!domain) throw std::invalid_argument("manifest: missing [domain] block");
  if (rank < 1) throw std::invalid_argument("manifest: missing [matrix] block");
  LaurentMatrix g(rank, std::vector<LaurentPoly>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) g[i][j] = LaurentPoly::parse(matrix_text[i][j]);
  return DiffModule(Prime(*prime), rank, std::move(g), *domain);
}

Triangulation Manifest::make_triangulation() const {
  if (!domain) throw std::invalid_argument("manifest: missing [domain] block");
  return Triangulation(marks, *domain);
}

GraphPL Manifest::make_graph_pl() const {
  if (!graph) throw std::invalid_argument("manifest: missing [graph] block");
  std::vector<Rat> values(graph->vertices().size(), Rat(0));
  for (const auto& [v, val] : graph_values) values[v] = val;
  GraphPL f = GraphPL::linear(*graph, std::move(values));
  for (const auto& [e, pos, val] : graph_edge_breaks)
    f.edge_breaks[e].push_back({pos, val});
  for (auto& breaks : f.edge_breaks)
    std::sort(breaks.begin(), breaks.end(),
              [](const GraphPL::Break& a, const GraphPL::Break& b) { return a.pos < b.pos; });
  f.validate(*graph);
  return f;
}

std::string Manifest::serialize() const {
  std::ostringstream os;
  if (prime) os << "prime = " << *prime << "\n";
  if (domain) {
    os << "\n[domain]\n";
    if (domain->kind == Domain::Kind::Disc)
      os << "kind = disc\ns0 = " << rat_str(domain->s0) << "\n";
    else
      os << "kind = annulus\ns1 = " << rat_str(domain->s1)
         << "\ns2 = " << rat_str(domain->s2) << "\n";
  }
  if (rank >= 1) {
    os << "\n[matrix]\nrank = " << rank << "\n";
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (matrix_text[i][j] != "0")
          os << "entry " << (i + 1) << " " << (j + 1) << " = " << matrix_text[i][j]
             << "\n";
  }
  if (!marks.empty()) {
    os << "\n[triangulation]\nmarks =";
    for (const auto& mk : marks) os << " " << rat_str(mk);
    os << "\n";
  }
  if (graph) {
    os << "\n[graph]\n";
    for (const auto& v : graph->vertices())
      os << "vertex " << v.name << (v.boundary ? " boundary" : "") << "\n";
    for (const auto& e : graph->edges()) {
      os << "edge " << graph->vertices()[e.u].name << " " << graph->vertices()[e.v].name
         << " " << rat_str(e.length);
      if (e.weight_u != 1 || e.weight_v != 1)
        os << " " << e.weight_u << " " << e.weight_v;
      os << "\n";
    }
    for (const auto& [v, val] : graph_values)
      os << "value " << graph->vertices()[v].name << " = " << rat_str(val) << "\n";
    for (const auto& [v, val] : graph_boundary_values)
      os << "boundary " << graph->vertices()[v].name << " = " << rat_str(val) << "\n";
    for (const auto& [e, pos, val] : graph_edge_breaks)
      os << "break " << (e + 1) << " " << rat_str(pos) << " = " << rat_str(val) << "\n";
  }
  os << "\n[run]\nN = " << order << "\nJ = " << tail << "\nsamples = " << samples
     << "\n";
  for (const auto& [c, s] : probes)
    os << "probe " << rat_str(c) << " " << rat_str(s) << "\n";
  if (!out_dir.empty()) os << "out = " << out_dir << "\n";
  return os.str();
}

}  // namespace convrad
