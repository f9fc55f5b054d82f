#include "convrad/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convrad/acceptance.hpp"
#include "convrad/polygon.hpp"

namespace convrad {

namespace {

// Finite sampling window for a skeleton PL function: the domain itself,
// with unbounded disc ends cut off below the interesting features.
std::pair<Rat, Rat> sample_window(const TropicalPL& f) {
  Rat hi = f.hi().finite() ? f.hi().value : Rat(2);
  Rat lo;
  if (f.lo().finite()) {
    lo = f.lo().value;
  } else {
    lo = f.breakpoints().empty() ? hi - 4 : f.breakpoints().front() - 2;
  }
  return {lo, hi};
}

void describe_domain(std::ostream& os, const Domain& dom) {
  if (dom.kind == Domain::Kind::Disc)
    os << "domain: disc s0=" << rat_str(dom.s0) << "\n";
  else
    os << "domain: annulus [" << rat_str(dom.s1) << ", " << rat_str(dom.s2)
       << "]\n";
}

}  // namespace

CommandResult cmd_radius(const Manifest& m) {
  DiffModule dm = m.make_module();
  RadiusEstimate est = emb_radius_pl(dm, m.order, Exec::Parallel);
  std::ostringstream os;
  os << "# convrad radius report v1\n";
  os << "prime: " << dm.p.value() << "\n";
  os << "rank: " << dm.rank << "\n";
  describe_domain(os, dm.domain);
  os << "order: " << est.order << " (estimate at order N; not a claimed limit)\n";
  os << "embedded: " << est.on_skeleton.serialize() << "\n";
  os << "breakpoints:";
  for (const auto& b : est.on_skeleton.breakpoints()) os << " " << rat_str(b);
  os << "\n";
  os << "provenance:";
  for (const auto& piece : est.provenance) {
    os << " [";
    for (std::size_t i = 0; i < piece.size(); ++i)
      os << (i ? "," : "")
         << (piece[i] == 0 ? std::string("cap") : std::to_string(piece[i]));
    os << "]";
  }
  os << "\n";
  auto [a, b] = sample_window(est.on_skeleton);
  return {os.str(), est.on_skeleton.sample_tsv(a, b, m.samples)};
}

CommandResult cmd_polygon(const Manifest& m) {
  DiffModule dm = m.make_module();
  Triangulation tri = m.make_triangulation();
  PolygonReport rep = assemble(dm, tri, m.order, m.probes, m.tail, Exec::Parallel);
  auto [a, b] = sample_window(rep.normalized);
  return {format_report(rep), rep.normalized.sample_tsv(a, b, m.samples)};
}

CommandResult cmd_laplacian(const Manifest& m) {
  if (!m.graph) throw std::invalid_argument("missing [graph] block");
  GraphPL f = m.make_graph_pl();
  PointMeasure mu = laplacian(*m.graph, f);
  std::ostringstream os, tsv;
  os << "# convrad laplacian report v1\n";
  os << "atoms: " << mu.atoms.size() << "\n";
  os << "total-mass: " << rat_str(mu.total()) << "\n";
  os << "classification: ";
  switch (classify(*m.graph, f)) {
    case Harmonicity::Harmonic: os << "harmonic"; break;
    case Harmonicity::Superharmonic: os << "superharmonic"; break;
    case Harmonicity::Subharmonic: os << "subharmonic"; break;
    default: os << "neither"; break;
  }
  os << " (interior)\n";
  tsv << "location\tmass\tmass_decimal\n";
  for (const auto& [loc, mass] : mu.atoms)
    tsv << loc.str(*m.graph) << "\t" << rat_str(mass) << "\t" << rat_double(mass)
        << "\n";
  return {os.str(), tsv.str()};
}

CommandResult cmd_dirichlet(const Manifest& m) {
  if (!m.graph) throw std::invalid_argument("missing [graph] block");
  if (m.graph_boundary_values.empty())
    throw std::invalid_argument("missing boundary values in [graph] block");
  GraphPL u = dirichlet_solve(*m.graph, m.graph_boundary_values);
  std::ostringstream os, tsv;
  os << "# convrad dirichlet report v1\n";
  os << "vertices: " << m.graph->vertices().size() << "\n";
  os << "harmonic(interior): "
     << (classify(*m.graph, u) == Harmonicity::Harmonic ? "yes" : "no") << "\n";
  tsv << "vertex\tvalue\tvalue_decimal\n";
  for (std::size_t i = 0; i < m.graph->vertices().size(); ++i)
    tsv << m.graph->vertices()[i].name << "\t" << rat_str(u.vertex_values[i])
        << "\t" << rat_double(u.vertex_values[i]) << "\n";
  return {os.str(), tsv.str()};
}

bool cmd_verify(std::ostream& os) { return acceptance_run_all(os); }

namespace {

void emit(const CommandResult& r, const std::string& sub, const std::string& out_dir) {
  std::cout << r.report;
  if (!r.samples_tsv.empty() && out_dir.empty())
    std::cout << "## samples (tsv)\n" << r.samples_tsv;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/" + sub + "_report.txt") << r.report;
    if (!r.samples_tsv.empty())
      std::ofstream(out_dir + "/" + sub + "_samples.tsv") << r.samples_tsv;
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"convrad: exact convergence polygons and graph potential theory"};
  app.require_subcommand(1);

  std::string manifest_path, out_dir;
  int order = -1, tail = -1, samples = -1;
  std::vector<CLI::App*> subs;
  for (const char* name : {"radius", "polygon", "laplacian", "dirichlet", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    auto* opt = sub->add_option("--manifest", manifest_path, "manifest file");
    if (std::string(name) != "verify") opt->required();
    sub->add_option("--order", order, "truncation order N override");
    sub->add_option("--tail", tail, "off-skeleton tail order J override");
    sub->add_option("--samples", samples, "TSV sample count override");
    sub->add_option("--out", out_dir, "output directory");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "verify") {
      bool ok = cmd_verify(std::cout);
      return ok ? 0 : 1;
    }
    Manifest m = load_manifest(manifest_path);
    if (order > 0) m.order = order;
    if (tail > 0) m.tail = tail;
    if (samples > 0) m.samples = samples;
    if (!out_dir.empty()) m.out_dir = out_dir;
    CommandResult r;
    if (sub == "radius")
      r = cmd_radius(m);
    else if (sub == "polygon")
      r = cmd_polygon(m);
    else if (sub == "laplacian")
      r = cmd_laplacian(m);
    else
      r = cmd_dirichlet(m);
    emit(r, sub, m.out_dir);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace convrad
