#include "convrad/acceptance.hpp"

#include <bit>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include "convrad/polygon.hpp"

namespace convrad {

namespace {

DiffModule make_scalar(std::int64_t p, const std::string& entry, const Domain& dom) {
  return DiffModule(Prime(p), 1, {{LaurentPoly::parse(entry)}}, dom);
}

// Max of a PL function over its full (possibly unbounded) domain;
// empty when the function is unbounded above.
std::optional<Rat> pl_max(const TropicalPL& f) {
  if (!f.lo().finite() && f.pieces().front().slope < 0) return std::nullopt;
  if (!f.hi().finite() && f.pieces().back().slope > 0) return std::nullopt;
  std::optional<Rat> best;
  auto take = [&](const Rat& v) {
    if (!best || v > *best) best = v;
  };
  if (f.lo().finite()) take(f.eval(f.lo().value));
  if (f.hi().finite()) take(f.eval(f.hi().value));
  for (const auto& b : f.breakpoints()) take(f.eval(b));
  if (f.breakpoints().empty() && !f.lo().finite() && !f.hi().finite())
    take(f.pieces().front().intercept);
  return best;
}

struct RandomCorpus {
  MetrizedGraph g;
  GraphPL f, h;
  std::map<int, Rat> boundary_values;
};

RandomCorpus random_instance(std::mt19937& rng) {
  auto rnd = [&](int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(rng);
  };
  RandomCorpus out;
  int n = rnd(2, 8);
  const Rat lengths[] = {Rat(1), Rat(1, 2), Rat(3, 2), Rat(2), Rat(3)};
  for (int i = 0; i < n; ++i)
    out.g.add_vertex("v" + std::to_string(i), i == 0 || rnd(0, 3) == 0);
  // Symmetric per-edge weights: total-mass cancellation and pairing
  // symmetry need a single conductance per edge.
  for (int i = 1; i < n; ++i) {
    int w = rnd(1, 3);
    out.g.add_edge(rnd(0, i - 1), i, lengths[rnd(0, 4)], w, w);
  }
  for (int extra = rnd(0, n / 2); extra > 0; --extra) {
    int u = rnd(0, n - 1), v = rnd(0, n - 1);
    int w = rnd(1, 3);
    if (u != v) out.g.add_edge(u, v, lengths[rnd(0, 4)], w, w);
  }
  auto random_pl = [&]() {
    GraphPL f;
    for (int i = 0; i < n; ++i) f.vertex_values.push_back(Rat(rnd(-6, 6), 2));
    for (const auto& e : out.g.edges()) {
      std::vector<GraphPL::Break> breaks;
      if (rnd(0, 1) == 1)
        breaks.push_back({e.length * Rat(rnd(1, 3), 4), Rat(rnd(-6, 6), 2)});
      f.edge_breaks.push_back(std::move(breaks));
    }
    f.validate(out.g);
    return f;
  };
  out.f = random_pl();
  out.h = random_pl();
  for (std::size_t i = 0; i < out.g.vertices().size(); ++i)
    if (out.g.vertices()[i].boundary)
      out.boundary_values[static_cast<int>(i)] = Rat(rnd(-6, 6), 2);
  return out;
}

// Star: interior center, two skeleton leaves with outgoing slopes p1, p2,
// plus k off-direction leaves with the given outgoing slopes. Unit edges.
std::pair<MetrizedGraph, GraphPL> star_function(const Rat& p1, const Rat& p2,
                                                const std::vector<Rat>& off) {
  MetrizedGraph g;
  GraphPL f;
  g.add_vertex("x", false);
  f.vertex_values.push_back(Rat(0));
  auto leaf = [&](const std::string& name, const Rat& slope) {
    int v = g.add_vertex(name, true);
    g.add_edge(0, v, Rat(1));
    f.vertex_values.push_back(slope);
    f.edge_breaks.push_back({});
  };
  leaf("a", p1);
  leaf("b", p2);
  for (std::size_t i = 0; i < off.size(); ++i)
    leaf("d" + std::to_string(i), off[i]);
  return {g, f};
}

}  // namespace

std::vector<BundledInstance> bundled_instances() {
  const Domain ann20 = Domain::annulus(Rat(-2), Rat(0));
  const Domain disc0 = Domain::disc(Rat(0));
  std::vector<BundledInstance> out;
  out.push_back({"exp-annulus", make_scalar(2, "1", ann20), 64});
  out.push_back({"exp-disc", make_scalar(2, "1", disc0), 64});
  out.push_back(
      {"slope2", make_scalar(3, "t^-2", Domain::annulus(Rat(-2), Rat(-1, 4))), 81});
  out.push_back({"trivial-annulus", make_scalar(2, "0", ann20), 8});
  out.push_back({"trivial-disc", make_scalar(2, "0", disc0), 8});
  out.push_back({"nilpotent", make_scalar(2, "t^-1", ann20), 8});
  return out;
}

bool acceptance_run_all(std::ostream& os) {
  bool all = true;
  int idx = 0;
  auto run = [&](const std::string& what, const std::function<bool()>& body) {
    ++idx;
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    os << "[" << (idx < 10 ? " " : "") << idx << "] " << (ok ? "PASS" : "FAIL")
       << " " << what << note << "\n";
    all = all && ok;
  };

  const auto instances = bundled_instances();
  const DiffModule& exp_ann = instances[0].dm;
  const DiffModule& exp_disc = instances[1].dm;
  const DiffModule& slope2 = instances[2].dm;
  const DiffModule& triv_ann = instances[3].dm;
  const DiffModule& triv_disc = instances[4].dm;
  const DiffModule& nilp = instances[5].dm;
  const Triangulation empty_ann({}, exp_ann.domain);
  const Triangulation empty_disc({}, exp_disc.domain);

  run("exponential instance: embedded polygon min(s, -(2^k-1)/2^k) at N = 2^k,"
      " k <= 7, against the factorial-valuation oracle",
      [&]() {
        for (int k = 1; k <= 7; ++k) {
          int N = 1 << k;
          // Oracle: best term is -v_2(n!)/n over n <= N, with
          // v_2(n!) = n - popcount(n).
          std::optional<Rat> best;
          for (int n = 1; n <= N; ++n) {
            Rat term(-(n - std::popcount(static_cast<unsigned>(n))), n);
            if (!best || term < *best) best = term;
          }
          if (*best != Rat(-(N - 1), N)) return false;
          TropicalPL expect(Endpoint::at(Rat(-2)), Endpoint::at(Rat(0)), {*best},
                            {Affine{Rat(1), Rat(0)}, Affine{Rat(0), *best}});
          if (emb_radius_pl(exp_ann, N).on_skeleton != expect) return false;
        }
        return true;
      });

  run("slope-2 instance: embedded piece of slope exactly 2, concave, slope"
      " certificate passes at rank 1",
      [&]() {
        PolygonReport rep = assemble(slope2, Triangulation({}, slope2.domain), 81,
                                     {}, 8, Exec::Parallel);
        TropicalPL expect = TropicalPL::affine(Endpoint::at(Rat(-2)),
                                               Endpoint::at(Rat(-1, 4)), Rat(2),
                                               Rat(-40, 81));
        bool has_slope2 = false;
        for (const auto& piece : rep.estimate.on_skeleton.pieces())
          has_slope2 = has_slope2 || piece.slope == 2;
        return rep.estimate.on_skeleton == expect && has_slope2 &&
               rep.concavity == Verdict::Pass && rep.slope_cert.pass;
      });

  run("trivial and nilpotent instances: normalized R_S is identically 1",
      [&]() {
        const Triangulation marked({Rat(-1)}, triv_ann.domain);
        for (const auto* dm : {&triv_ann, &nilp}) {
          for (const auto* tri : {&empty_ann, &marked}) {
            TropicalPL f = normalize(emb_radius_pl(*dm, 8), *tri, dm->domain);
            if (pl_max(f) != Rat(0) ||
                f.pieces() != std::vector<Affine>{Affine{Rat(0), Rat(0)}})
              return false;
          }
        }
        TropicalPL f = normalize(emb_radius_pl(triv_disc, 8), empty_disc,
                                 triv_disc.domain);
        return f.pieces() == std::vector<Affine>{Affine{Rat(0), Rat(0)}};
      });

  run("every bundled instance: polygon continuous by construction, concave"
      " (or inconclusive-removed-at-2N), slope denominators <= rank",
      [&]() {
        for (const auto& inst : instances) {
          PolygonReport rep =
              assemble(inst.dm, Triangulation({}, inst.dm.domain), inst.order, {},
                       8, Exec::Parallel);
          if (rep.concavity == Verdict::Fail) return false;
          if (!rep.slope_cert.pass || !rep.slope_cert_normalized.pass)
            return false;
        }
        return true;
      });

  run("potential-theory kernel: zero total mass, pairing symmetry, harmonic"
      " Dirichlet solutions with the maximum principle, star center values 1"
      " and 3/2",
      [&]() {
        std::mt19937 rng(20260824u);
        for (int trial = 0; trial < 200; ++trial) {
          RandomCorpus c = random_instance(rng);
          if (laplacian(c.g, c.f).total() != 0) return false;
          if (pairing(c.g, c.f, c.h) != pairing(c.g, c.h, c.f)) return false;
          GraphPL u = dirichlet_solve(c.g, c.boundary_values);
          if (classify(c.g, u) != Harmonicity::Harmonic) return false;
          Rat lo = c.boundary_values.begin()->second, hi = lo;
          for (const auto& [v, val] : c.boundary_values) {
            lo = std::min(lo, val);
            hi = std::max(hi, val);
          }
          for (const auto& val : u.vertex_values)
            if (val < lo || val > hi) return false;
        }
        MetrizedGraph star1;
        star1.add_vertex("x", false);
        for (int i = 0; i < 3; ++i) {
          int v = star1.add_vertex("b" + std::to_string(i), true);
          star1.add_edge(0, v, Rat(1));
        }
        std::map<int, Rat> bv{{1, Rat(0)}, {2, Rat(0)}, {3, Rat(3)}};
        if (dirichlet_solve(star1, bv).vertex_values[0] != 1) return false;
        MetrizedGraph star2;
        star2.add_vertex("x", false);
        star2.add_edge(0, star2.add_vertex("b0", true), Rat(1), 1, 1);
        star2.add_edge(0, star2.add_vertex("b1", true), Rat(1), 1, 1);
        star2.add_edge(0, star2.add_vertex("b2", true), Rat(1), 2, 2);
        return dirichlet_solve(star2, bv).vertex_values[0] == Rat(3, 2);
      });

  run("direction-count bound: skeleton slopes (-2, 0), threshold 1/2 — five"
      " off-directions of slope >= 1/2 always break super-harmonicity, four"
      " are attainable",
      [&]() {
        if (direction_count_bound(Rat(-2), Rat(0), Rat(1, 2)) != 4) return false;
        const std::vector<Rat> grid{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
        std::vector<Rat> off(5, grid[0]);
        std::function<bool(std::size_t)> sweep = [&](std::size_t i) -> bool {
          if (i == off.size()) {
            auto [g, f] = star_function(Rat(-2), Rat(0), off);
            Harmonicity h = classify(g, f);
            return h != Harmonicity::Harmonic && h != Harmonicity::Superharmonic;
          }
          for (const auto& s : grid) {
            off[i] = s;
            if (!sweep(i + 1)) return false;
          }
          return true;
        };
        if (!sweep(0)) return false;
        auto [g, f] = star_function(Rat(-2), Rat(0), std::vector<Rat>(4, Rat(1, 2)));
        Harmonicity h = classify(g, f);
        return h == Harmonicity::Harmonic || h == Harmonicity::Superharmonic;
      });

  run("log R is super-harmonic on the probed path embeddings of the bundled"
      " instances",
      [&]() {
        std::vector<std::pair<Rat, Rat>> probes1{
            {Rat(1), Rat(-1)}, {Rat(3), Rat(-1)}, {Rat(5), Rat(-1)}};
        PolygonReport r1 = assemble(exp_ann, empty_ann, 64, probes1, 8);
        PolygonReport r2 =
            assemble(slope2, Triangulation({}, slope2.domain), 27,
                     {{Rat(3), Rat(-3, 2)}}, 8);
        PolygonReport r3 = assemble(triv_ann, empty_ann, 8, {{Rat(2), Rat(-3, 2)}}, 8);
        PolygonReport r4 = assemble(nilp, empty_ann, 8, {{Rat(2), Rat(-3, 2)}}, 8);
        return r1.superharmonic == Verdict::Pass &&
               r2.superharmonic == Verdict::Pass &&
               r3.superharmonic == Verdict::Pass &&
               r4.superharmonic == Verdict::Pass;
      });

  run("disc instances: center-to-boundary polygon starts flat and keeps all"
      " slopes non-positive",
      [&]() {
        return borddisque_check(exp_disc, empty_disc, 64) == Verdict::Pass &&
               borddisque_check(triv_disc, empty_disc, 8) == Verdict::Pass;
      });

  run("rho maps: refinements adding 1-3 marks give slopes in {-1,0,1},"
      " vanishing at base marks; retriangulation never exceeds 0",
      [&]() {
        const Domain disc0 = exp_disc.domain;
        const Domain ann20 = exp_ann.domain;
        struct Case {
          Domain dom;
          std::vector<Rat> base, refined;
        };
        std::vector<Case> cases{
            {disc0, {}, {Rat(-1)}},
            {disc0, {Rat(-2)}, {Rat(-2), Rat(-1), Rat(-1, 2)}},
            {ann20, {Rat(-1)}, {Rat(-3, 2), Rat(-1), Rat(-1, 2)}},
            {ann20, {}, {Rat(-1)}},
        };
        TropicalPL f = normalize(emb_radius_pl(exp_ann, 64), empty_ann, ann20);
        for (const auto& c : cases) {
          Triangulation base(c.base, c.dom), refined(c.refined, c.dom);
          RhoCheckResult rc = rho_maps_check(c.dom, base, refined);
          if (rc.verdict != Verdict::Pass) return false;
          if (c.dom.kind == Domain::Kind::Annulus) {
            TropicalPL g = retriangulate(f, rc.rho);
            auto mx = pl_max(g);
            if (!mx || *mx > 0) return false;
          }
        }
        return true;
      });

  run("off-skeleton probes at c = 1, 3, 5 one step below the branch point:"
      " certified bounds exactly equal the skeleton value",
      [&]() {
        RadiusEstimate est = emb_radius_pl(exp_ann, 64);
        for (std::int64_t c : {1, 3, 5}) {
          Rat branch = abs_log(Rat(c), exp_ann.p);
          auto [lower, upper] = radius_log_at(exp_ann, Rat(c), branch - 1, 64, 8);
          if (lower != upper || lower != est.on_skeleton.eval(branch))
            return false;
        }
        return true;
      });

  os << (all ? "all criteria passed" : "criteria FAILED") << "\n";
  return all;
}

}  // namespace convrad
