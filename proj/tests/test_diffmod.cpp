#include <doctest.h>

#include <random>

#include "convrad/diffmod.hpp"

using namespace convrad;

namespace {

DiffModule scalar(std::int64_t p, const char* g, const Domain& dom) {
  return DiffModule(Prime(p), 1, {{LaurentPoly::parse(g)}}, dom);
}

}  // namespace

TEST_CASE("domains and triangulations validate") {
  CHECK_THROWS_AS(Domain::annulus(Rat(0), Rat(0)), std::invalid_argument);
  Domain ann = Domain::annulus(Rat(-2), Rat(0));
  Domain disc = Domain::disc(Rat(0));
  CHECK(!ann.skeleton_lo().finite() == false);
  CHECK(!disc.skeleton_lo().finite());
  CHECK_THROWS_AS(Triangulation({Rat(1)}, ann), std::invalid_argument);
  CHECK_THROWS_AS(Triangulation({Rat(0)}, disc), std::invalid_argument);
  Triangulation t({Rat(-1), Rat(-1), Rat(-3, 2)}, ann);
  CHECK(t.marks == std::vector<Rat>{Rat(-3, 2), Rat(-1)});
  CHECK(t.contains(Triangulation({Rat(-1)}, ann)));
  CHECK(!Triangulation({Rat(-1)}, ann).contains(t));
}

TEST_CASE("membership of off-center points") {
  Prime two(2);
  Domain ann = Domain::annulus(Rat(-2), Rat(0));
  CHECK(ann.contains_point(Rat(0), Rat(-1), two));
  CHECK(ann.contains_point(Rat(1), Rat(-3), two));   // branch at 0
  CHECK(ann.contains_point(Rat(4), Rat(-3), two));   // branch at -2, boundary
  CHECK(!ann.contains_point(Rat(8), Rat(-4), two));  // branch at -3, outside
  CHECK(ann.contains_point(Rat(2), Rat(-3), two));   // branch at -1
  CHECK(!ann.contains_point(Rat(0), Rat(-3), two));
  Domain disc = Domain::disc(Rat(0));
  CHECK(disc.contains_point(Rat(1), Rat(-5), two));
  CHECK(!disc.contains_point(Rat(1, 2), Rat(-1), two));  // abs_log = 1 > 0
}

TEST_CASE("negative degrees require an annulus") {
  CHECK_THROWS_WITH_AS(scalar(2, "t^-1", Domain::disc(Rat(0))),
                       "pole inside domain: negative degree on a disc",
                       std::invalid_argument);
  CHECK_NOTHROW(scalar(2, "t^-1", Domain::annulus(Rat(-2), Rat(0))));
}

TEST_CASE("iterate matches the scalar recursion on random modules") {
  std::mt19937 rng(13);
  auto rnd = [&](int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(rng);
  };
  Domain ann = Domain::annulus(Rat(-2), Rat(0));
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly g;
    for (int i = rnd(1, 3); i > 0; --i) g.set(rnd(-2, 3), Rat(rnd(-5, 5), rnd(1, 4)));
    if (g.is_zero()) g.set(0, Rat(1));
    DiffModule dm(Prime(3), 1, {{g}}, ann);
    auto gs = iterate(dm, 8);
    LaurentPoly cur = g;
    CHECK(gs[0][0][0] == cur);
    for (int n = 1; n < 8; ++n) {
      cur = cur.derive() + cur * g;
      CHECK(gs[n][0][0] == cur);
    }
  }
}

TEST_CASE("exponential instance polygon is exact") {
  DiffModule dm = scalar(2, "1", Domain::annulus(Rat(-2), Rat(0)));
  RadiusEstimate est = emb_radius_pl(dm, 64);
  TropicalPL expect(Endpoint::at(Rat(-2)), Endpoint::at(Rat(0)), {Rat(-63, 64)},
                    {Affine{Rat(1), Rat(0)}, Affine{Rat(0), Rat(-63, 64)}});
  CHECK(est.on_skeleton == expect);
  REQUIRE(est.provenance.size() == 2);
  // Left piece is the cap; right piece is the order-64 term.
  CHECK(est.provenance[0] == std::vector<int>{0});
  CHECK(est.provenance[1] == std::vector<int>{64});
  RadiusEstimate est128 = emb_radius_pl(dm, 128);
  CHECK(est128.on_skeleton.pieces().back() == Affine{Rat(0), Rat(-127, 128)});
}

TEST_CASE("slope-2 instance polygon is exact") {
  DiffModule dm = scalar(3, "t^-2", Domain::annulus(Rat(-2), Rat(-1, 4)));
  RadiusEstimate est = emb_radius_pl(dm, 81);
  CHECK(est.on_skeleton == TropicalPL::affine(Endpoint::at(Rat(-2)),
                                              Endpoint::at(Rat(-1, 4)), Rat(2),
                                              Rat(-40, 81)));
}

TEST_CASE("estimate is monotone in N and capped") {
  DiffModule dm = scalar(2, "1 + t", Domain::annulus(Rat(-2), Rat(0)));
  TropicalPL cap = cap_pl(dm.domain);
  RadiusEstimate e8 = emb_radius_pl(dm, 8);
  RadiusEstimate e16 = emb_radius_pl(dm, 16);
  RadiusEstimate e32 = emb_radius_pl(dm, 32);
  for (int k = -8; k <= 0; ++k) {
    Rat s(k, 4);
    CHECK(e16.on_skeleton.eval(s) <= e8.on_skeleton.eval(s));
    CHECK(e32.on_skeleton.eval(s) <= e16.on_skeleton.eval(s));
    CHECK(e8.on_skeleton.eval(s) <= cap.eval(s));
  }
}

TEST_CASE("trivial connection saturates the cap") {
  for (const Domain& dom :
       {Domain::annulus(Rat(-2), Rat(0)), Domain::disc(Rat(-1, 2))}) {
    DiffModule dm = scalar(5, "0", dom);
    CHECK(emb_radius_pl(dm, 8).on_skeleton == cap_pl(dom));
    CHECK(normalize(emb_radius_pl(dm, 8), Triangulation({}, dom), dom) ==
          TropicalPL::constant(dom.skeleton_lo(), dom.skeleton_hi(), Rat(0)));
  }
}

TEST_CASE("radius_log_at: skeleton points agree with the symbolic polygon") {
  DiffModule dm = scalar(2, "1", Domain::annulus(Rat(-2), Rat(0)));
  RadiusEstimate est = emb_radius_pl(dm, 64);
  for (int k = -4; k <= 0; ++k) {
    Rat s(k, 2);
    auto [lo, hi] = radius_log_at(dm, Rat(0), s, 64, 4);
    CHECK(lo == hi);
    CHECK(lo == est.on_skeleton.eval(s));
  }
  CHECK_THROWS_AS(radius_log_at(dm, Rat(0), Rat(1), 64, 4), std::domain_error);
}

TEST_CASE("radius_log_at: off-skeleton bounds are certified and ordered") {
  DiffModule dm = scalar(3, "t^-2", Domain::annulus(Rat(-2), Rat(-1, 4)));
  auto [lo, hi] = radius_log_at(dm, Rat(3), Rat(-3, 2), 27, 8);
  CHECK(lo <= hi);
  // Rational-point stabilization: pushing s further down does not change
  // the certified value once the branch is constant.
  auto [lo2, hi2] = radius_log_at(dm, Rat(3), Rat(-7, 4), 27, 8);
  CHECK(lo == lo2);
  CHECK(hi == hi2);
}

TEST_CASE("rho_pl and retriangulate") {
  Domain ann = Domain::annulus(Rat(-2), Rat(0));
  Domain disc = Domain::disc(Rat(0));
  CHECK(rho_pl(ann, Triangulation({Rat(-1)}, ann)) ==
        TropicalPL::identity(Endpoint::at(Rat(-2)), Endpoint::at(Rat(0))));
  CHECK(rho_pl(disc, Triangulation({}, disc)) ==
        TropicalPL::constant(Endpoint::neg_inf(), Endpoint::at(Rat(0)), Rat(0)));
  TropicalPL rho_marked = rho_pl(disc, Triangulation({Rat(-1)}, disc));
  CHECK(rho_marked.eval(Rat(-5)) == Rat(-1));
  CHECK(rho_marked.eval(Rat(-1, 2)) == Rat(-1, 2));

  // f = min(s, -1) against rho = s: min(0, -1 - s), breakpoint at -1.
  Endpoint lo = Endpoint::at(Rat(-2)), hi = Endpoint::at(Rat(0));
  TropicalPL f = TropicalPL::identity(lo, hi).pointwise_min(
      TropicalPL::constant(lo, hi, Rat(-1)));
  TropicalPL r = retriangulate(f, TropicalPL::identity(lo, hi));
  CHECK(r.breakpoints() == std::vector<Rat>{Rat(-1)});
  CHECK(r.eval(Rat(-2)) == Rat(0));
  CHECK(r.eval(Rat(0)) == Rat(-1));
  CHECK(r.pieces()[0].slope == 0);
  CHECK(r.pieces()[1].slope == -1);
}
