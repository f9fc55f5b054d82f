#pragma once

#include <string>
#include <utility>
#include <vector>

#include "convrad/diffmod.hpp"
#include "convrad/graph.hpp"

namespace convrad {

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_str(Verdict v);

struct ProbeResult {
  Rat c, s;
  Rat lower, upper;   // certified bounds on log_p R^emb_N at eta_{c,p^s}
  Rat branch_point;   // abs_log(c): where the branch meets the skeleton
  Rat skeleton_value; // embedded estimate at the branch point
  Verdict constancy;  // inconclusive when the bounds straddle
};

struct PolygonReport {
  explicit PolygonReport(Prime prime) : p(prime) {}
  Prime p;
  int rank = 1;
  Domain domain{};
  Triangulation tri;
  int order = 0;  // N; every verdict is "at order N"
  int tail_order = 0;
  RadiusEstimate estimate;
  TropicalPL normalized;
  Verdict concavity = Verdict::Pass;  // embedded polygon; 2N retry on violation
  SlopeCertificate slope_cert;             // embedded vs rank
  SlopeCertificate slope_cert_normalized;  // normalized vs rank
  std::vector<Rat> breakpoints;            // of the normalized polygon
  std::vector<ProbeResult> probes;
  Verdict superharmonic = Verdict::Pass;   // log R on the probed subgraph
};

// Runs the estimator, normalization and every certification on one
// instance. Probes are (c, s) pairs; each gets certified off-skeleton
// bounds compared against the skeleton value at its branch point.
PolygonReport assemble(const DiffModule& dm, const Triangulation& tri, int N,
                       const std::vector<std::pair<Rat, Rat>>& probes, int J,
                       Exec exec = Exec::Serial);

// Path-graph embedding of the normalized polygon plus one stub per
// exactly-bounded probe; f_out receives the PL data.
MetrizedGraph embed_controlling_graph(const PolygonReport& report, GraphPL* f_out);

// Pass iff the embedded log R function is super-harmonic on the interior
// of the probed subgraph.
Verdict check_superharmonic_logR(const PolygonReport& report);

// Disc only: center-to-boundary polygon must start with slope 0 and keep
// all slopes non-positive.
Verdict borddisque_check(const DiffModule& dm, const Triangulation& tri, int N);

struct RhoCheckResult {
  Verdict verdict = Verdict::Pass;
  TropicalPL rho;  // log rho_{S',S} on the skeleton
};

// Verifies log rho_{S',S} has slopes in {-1,0,1}, vanishes at the marks
// of S, and never exceeds 0; requires tri_refined to contain tri.
RhoCheckResult rho_maps_check(const Domain& dom, const Triangulation& tri,
                              const Triangulation& tri_refined);

// The slope/vanishing test alone, reusable against adversarial inputs.
Verdict check_rho_properties(const TropicalPL& rho, const Triangulation& tri_base);

std::string format_report(const PolygonReport& report);

}  // namespace convrad
