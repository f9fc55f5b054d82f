#include "convrad/polygon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace convrad {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

PolygonReport assemble(const DiffModule& dm, const Triangulation& tri, int N,
                       const std::vector<std::pair<Rat, Rat>>& probes, int J,
                       Exec exec) {
  PolygonReport rep(dm.p);
  rep.rank = dm.rank;
  rep.domain = dm.domain;
  rep.tri = tri;
  rep.order = N;
  rep.tail_order = J;
  rep.estimate = emb_radius_pl(dm, N, exec);
  rep.normalized = normalize(rep.estimate, tri, dm.domain);
  rep.breakpoints = rep.normalized.breakpoints();

  if (rep.estimate.on_skeleton.is_concave()) {
    rep.concavity = Verdict::Pass;
  } else {
    // Truncation artifacts can transiently break concavity that the full
    // limit restores; retry at 2N before calling it a failure.
    RadiusEstimate refined = emb_radius_pl(dm, 2 * N, exec);
    rep.concavity = refined.on_skeleton.is_concave() ? Verdict::Inconclusive
                                                     : Verdict::Fail;
  }
  rep.slope_cert = certify_slopes(rep.estimate.on_skeleton, dm.rank);
  rep.slope_cert_normalized = certify_slopes(rep.normalized, dm.rank);

  for (const auto& [c, s] : probes) {
    auto [lower, upper] = radius_log_at(dm, c, s, N, J);
    ProbeResult pr{c, s, lower, upper, Rat(0), Rat(0), Verdict::Pass};
    pr.branch_point = (c == 0) ? s : abs_log(c, dm.p);
    pr.skeleton_value = rep.estimate.on_skeleton.eval(pr.branch_point);
    if (lower == upper)
      pr.constancy = (lower == pr.skeleton_value) ? Verdict::Pass : Verdict::Fail;
    else if (lower <= pr.skeleton_value && pr.skeleton_value <= upper)
      pr.constancy = Verdict::Inconclusive;
    else
      pr.constancy = Verdict::Fail;
    rep.probes.push_back(std::move(pr));
  }
  rep.superharmonic = check_superharmonic_logR(rep);
  return rep;
}

MetrizedGraph embed_controlling_graph(const PolygonReport& report, GraphPL* f_out) {
  const TropicalPL& f = report.normalized;
  const TropicalPL rho = rho_pl(report.domain, report.tri);

  std::set<Rat> nodes(f.breakpoints().begin(), f.breakpoints().end());
  for (const auto& pr : report.probes)
    if (pr.lower == pr.upper && pr.s < pr.branch_point)
      nodes.insert(pr.branch_point);
  if (f.hi().finite()) nodes.insert(f.hi().value);
  if (f.lo().finite()) {
    nodes.insert(f.lo().value);
  } else {
    // Unbounded disc skeleton: truncate one unit below everything else.
    Rat cut = nodes.empty() ? f.hi().value - 2 : *nodes.begin() - 1;
    nodes.insert(cut);
  }
  if (nodes.size() < 2) nodes.insert(*nodes.begin() - 1);

  std::vector<Rat> path(nodes.begin(), nodes.end());
  MetrizedGraph g;
  GraphPL pl;
  for (std::size_t i = 0; i < path.size(); ++i) {
    bool boundary = (i == 0 || i + 1 == path.size());
    g.add_vertex("s=" + rat_str(path[i]), boundary);
    pl.vertex_values.push_back(f.eval(path[i]));
  }
  pl.edge_breaks.assign(path.size() - 1, {});
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    g.add_edge(static_cast<int>(i), static_cast<int>(i + 1), path[i + 1] - path[i]);

  // One stub per exactly-bounded probe: linear from the branch vertex to a
  // boundary tip carrying the normalized probe value.
  int stub_id = 0;
  for (const auto& pr : report.probes) {
    if (pr.lower != pr.upper || !(pr.s < pr.branch_point)) continue;
    auto it = std::lower_bound(path.begin(), path.end(), pr.branch_point);
    if (it == path.end() || *it != pr.branch_point) continue;
    int branch_vertex = static_cast<int>(it - path.begin());
    Rat probe_norm = std::min(Rat(pr.lower - rho.eval(pr.branch_point)), Rat(0));
    int tip = g.add_vertex("probe" + std::to_string(stub_id++) + ":c=" +
                               rat_str(pr.c) + ",s=" + rat_str(pr.s),
                           true);
    g.add_edge(branch_vertex, tip, pr.branch_point - pr.s);
    pl.vertex_values.push_back(probe_norm);
    pl.edge_breaks.push_back({});
  }
  if (f_out) *f_out = pl;
  return g;
}

Verdict check_superharmonic_logR(const PolygonReport& report) {
  GraphPL pl;
  MetrizedGraph g = embed_controlling_graph(report, &pl);
  Harmonicity h = classify(g, pl, /*interior_only=*/true);
  return (h == Harmonicity::Harmonic || h == Harmonicity::Superharmonic)
             ? Verdict::Pass
             : Verdict::Fail;
}

Verdict borddisque_check(const DiffModule& dm, const Triangulation& tri, int N) {
  if (dm.domain.kind != Domain::Kind::Disc)
    throw std::invalid_argument("disc required");
  RadiusEstimate est = emb_radius_pl(dm, N);
  TropicalPL f = normalize(est, tri, dm.domain);
  // Orientation fixed center-to-boundary, i.e. increasing s.
  const auto& ps = f.pieces();
  if (ps.front().slope != 0) return Verdict::Fail;
  for (const auto& piece : ps)
    if (piece.slope > 0) return Verdict::Fail;
  return Verdict::Pass;
}

Verdict check_rho_properties(const TropicalPL& rho, const Triangulation& tri_base) {
  for (const auto& piece : rho.pieces()) {
    if (piece.slope != -1 && piece.slope != 0 && piece.slope != 1)
      return Verdict::Fail;
  }
  for (const auto& m : tri_base.marks)
    if (rho.eval(m) != 0) return Verdict::Fail;
  // log rho_{S',S} <= 0 everywhere: check finite ends, breakpoints, and
  // the sign of slopes running off unbounded ends.
  if (rho.lo().finite() && rho.eval(rho.lo().value) > 0) return Verdict::Fail;
  if (rho.hi().finite() && rho.eval(rho.hi().value) > 0) return Verdict::Fail;
  for (const auto& b : rho.breakpoints())
    if (rho.eval(b) > 0) return Verdict::Fail;
  if (!rho.lo().finite() && rho.pieces().front().slope < 0) return Verdict::Fail;
  if (!rho.hi().finite() && rho.pieces().back().slope > 0) return Verdict::Fail;
  return Verdict::Pass;
}

RhoCheckResult rho_maps_check(const Domain& dom, const Triangulation& tri,
                              const Triangulation& tri_refined) {
  if (!tri_refined.contains(tri))
    throw std::invalid_argument("S' must contain S");
  TropicalPL rho = rho_pl(dom, tri_refined) - rho_pl(dom, tri);
  return {check_rho_properties(rho, tri), rho};
}

std::string format_report(const PolygonReport& rep) {
  std::ostringstream os;
  os << "# convrad polygon report v1\n";
  os << "orientation: discs center-to-boundary, annuli by increasing s = log_p r\n";
  os << "prime: " << rep.p.value() << "\n";
  os << "rank: " << rep.rank << "\n";
  if (rep.domain.kind == Domain::Kind::Disc)
    os << "domain: disc s0=" << rat_str(rep.domain.s0) << "\n";
  else
    os << "domain: annulus [" << rat_str(rep.domain.s1) << ", "
       << rat_str(rep.domain.s2) << "]\n";
  os << "marks:";
  for (const auto& m : rep.tri.marks) os << " " << rat_str(m);
  os << "\n";
  os << "order: " << rep.order << " (estimate at order N; not a claimed limit)\n";
  os << "tail-order: " << rep.tail_order << "\n";
  os << "embedded: " << rep.estimate.on_skeleton.serialize() << "\n";
  os << "normalized: " << rep.normalized.serialize() << "\n";
  os << "provenance:";
  for (const auto& piece : rep.estimate.provenance) {
    os << " [";
    for (std::size_t i = 0; i < piece.size(); ++i)
      os << (i ? "," : "") << (piece[i] == 0 ? std::string("cap") : std::to_string(piece[i]));
    os << "]";
  }
  os << "\n";
  os << "concavity(embedded): " << verdict_str(rep.concavity) << "\n";
  os << "slope-cert(embedded, rank " << rep.rank
     << "): " << (rep.slope_cert.pass ? "pass" : "fail");
  for (auto i : rep.slope_cert.offending)
    os << " piece#" << i << "=" << rat_str(rep.estimate.on_skeleton.pieces()[i].slope);
  os << "\n";
  os << "slope-cert(normalized, rank " << rep.rank
     << "): " << (rep.slope_cert_normalized.pass ? "pass" : "fail");
  for (auto i : rep.slope_cert_normalized.offending)
    os << " piece#" << i << "=" << rat_str(rep.normalized.pieces()[i].slope);
  os << "\n";
  os << "breakpoints(normalized):";
  for (const auto& b : rep.breakpoints) os << " " << rat_str(b);
  os << "\n";
  for (const auto& pr : rep.probes) {
    os << "probe c=" << rat_str(pr.c) << " s=" << rat_str(pr.s)
       << ": bounds=[" << rat_str(pr.lower) << ", " << rat_str(pr.upper)
       << "] branch=" << rat_str(pr.branch_point)
       << " skeleton=" << rat_str(pr.skeleton_value)
       << " constancy=" << verdict_str(pr.constancy);
    if (pr.constancy != Verdict::Pass) os << " (at order " << rep.order << ")";
    os << "\n";
  }
  os << "no non-constancy detected on probed branches at order " << rep.order
     << ": "
     << (std::all_of(rep.probes.begin(), rep.probes.end(),
                     [](const ProbeResult& pr) { return pr.constancy == Verdict::Pass; })
             ? "yes"
             : "no")
     << "\n";
  os << "superharmonic(log R, probed subgraph): " << verdict_str(rep.superharmonic)
     << "\n";
  return os.str();
}

}  // namespace convrad
