#include <doctest.h>

#include "convrad/polygon.hpp"

using namespace convrad;

namespace {

DiffModule scalar(std::int64_t p, const char* g, const Domain& dom) {
  return DiffModule(Prime(p), 1, {{LaurentPoly::parse(g)}}, dom);
}

}  // namespace

TEST_CASE("assemble on the exponential instance") {
  DiffModule dm = scalar(2, "1", Domain::annulus(Rat(-2), Rat(0)));
  Triangulation tri({}, dm.domain);
  std::vector<std::pair<Rat, Rat>> probes{{Rat(1), Rat(-1)}, {Rat(3), Rat(-1)}};
  PolygonReport rep = assemble(dm, tri, 64, probes, 8);

  CHECK(rep.concavity == Verdict::Pass);
  CHECK(rep.slope_cert.pass);
  CHECK(rep.slope_cert_normalized.pass);
  // Normalized polygon: min(0, -63/64 - s), flat then slope -1.
  REQUIRE(rep.normalized.pieces().size() == 2);
  CHECK(rep.normalized.pieces()[0].slope == 0);
  CHECK(rep.normalized.pieces()[1].slope == -1);
  CHECK(rep.breakpoints == std::vector<Rat>{Rat(-63, 64)});
  for (const auto& pr : rep.probes) {
    CHECK(pr.constancy == Verdict::Pass);
    CHECK(pr.lower == pr.upper);
    CHECK(pr.lower == Rat(-63, 64));
    CHECK(pr.branch_point == Rat(0));
  }
  CHECK(rep.superharmonic == Verdict::Pass);

  std::string text = format_report(rep);
  CHECK(text.find("# convrad polygon report v1") == 0);
  CHECK(text.find("concavity(embedded): pass") != std::string::npos);
  CHECK(text.find("no non-constancy detected on probed branches at order 64: yes") !=
        std::string::npos);
  // Determinism.
  CHECK(format_report(assemble(dm, tri, 64, probes, 8)) == text);
}

TEST_CASE("assemble on the trivial connection") {
  DiffModule dm = scalar(2, "0", Domain::annulus(Rat(-2), Rat(0)));
  PolygonReport rep = assemble(dm, Triangulation({}, dm.domain), 8,
                               {{Rat(2), Rat(-3, 2)}}, 4);
  CHECK(rep.concavity == Verdict::Pass);
  CHECK(rep.normalized ==
        TropicalPL::constant(Endpoint::at(Rat(-2)), Endpoint::at(Rat(0)), Rat(0)));
  CHECK(rep.breakpoints.empty());
  REQUIRE(rep.probes.size() == 1);
  CHECK(rep.probes[0].constancy == Verdict::Pass);
  CHECK(rep.superharmonic == Verdict::Pass);
}

TEST_CASE("probes out of the domain propagate errors") {
  DiffModule dm = scalar(2, "1", Domain::annulus(Rat(-2), Rat(0)));
  CHECK_THROWS_AS(
      assemble(dm, Triangulation({}, dm.domain), 8, {{Rat(0), Rat(1)}}, 4),
      std::domain_error);
}

TEST_CASE("controlling-graph embedding carries the polygon data") {
  DiffModule dm = scalar(2, "1", Domain::annulus(Rat(-2), Rat(0)));
  PolygonReport rep = assemble(dm, Triangulation({}, dm.domain), 64,
                               {{Rat(1), Rat(-1)}}, 8);
  GraphPL pl;
  MetrizedGraph g = embed_controlling_graph(rep, &pl);
  pl.validate(g);
  CHECK(g.connected());
  // Path nodes -2, -63/64, 0 plus one probe stub.
  CHECK(g.vertices().size() == 4);
  CHECK(g.edges().size() == 3);
  Harmonicity h = classify(g, pl);
  CHECK((h == Harmonicity::Harmonic || h == Harmonicity::Superharmonic));
}

TEST_CASE("convex kink fails the superharmonicity gate") {
  // Hand-built report shape: a convex normalized polygon must fail.
  PolygonReport rep{Prime(2)};
  rep.domain = Domain::annulus(Rat(-2), Rat(0));
  rep.tri = Triangulation({}, rep.domain);
  Endpoint lo = Endpoint::at(Rat(-2)), hi = Endpoint::at(Rat(0));
  rep.normalized = TropicalPL(lo, hi, {Rat(-1)},
                              {Affine{Rat(-1), Rat(-2)}, Affine{Rat(0), Rat(-1)}});
  rep.estimate = RadiusEstimate{8, rep.normalized, {}};
  CHECK(check_superharmonic_logR(rep) == Verdict::Fail);
}

TEST_CASE("borddisque_check on disc instances") {
  Domain disc = Domain::disc(Rat(0));
  Triangulation tri({}, disc);
  CHECK(borddisque_check(scalar(2, "1", disc), tri, 64) == Verdict::Pass);
  CHECK(borddisque_check(scalar(2, "0", disc), tri, 8) == Verdict::Pass);
  CHECK_THROWS_WITH_AS(
      borddisque_check(scalar(2, "1", Domain::annulus(Rat(-2), Rat(0))), tri, 8),
      "disc required", std::invalid_argument);
}

TEST_CASE("rho map checks") {
  Domain disc = Domain::disc(Rat(0));
  Triangulation base({}, disc), refined({Rat(-1)}, disc);
  RhoCheckResult same = rho_maps_check(disc, base, base);
  CHECK(same.verdict == Verdict::Pass);
  CHECK(same.rho ==
        TropicalPL::constant(Endpoint::neg_inf(), Endpoint::at(Rat(0)), Rat(0)));

  RhoCheckResult r = rho_maps_check(disc, base, refined);
  CHECK(r.verdict == Verdict::Pass);
  for (const auto& piece : r.rho.pieces())
    CHECK((piece.slope == -1 || piece.slope == 0 || piece.slope == 1));

  CHECK_THROWS_WITH_AS(rho_maps_check(disc, refined, base), "S' must contain S",
                       std::invalid_argument);

  // Adversarial slope-2 PL fails the property check.
  TropicalPL bad = TropicalPL::affine(Endpoint::neg_inf(), Endpoint::at(Rat(0)),
                                      Rat(2), Rat(0));
  CHECK(check_rho_properties(bad, base) == Verdict::Fail);
  // Positive value fails too.
  TropicalPL pos = TropicalPL::constant(Endpoint::neg_inf(), Endpoint::at(Rat(0)),
                                        Rat(1));
  CHECK(check_rho_properties(pos, base) == Verdict::Fail);
}
