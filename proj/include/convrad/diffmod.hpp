#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convrad/laurent.hpp"
#include "convrad/padic.hpp"
#include "convrad/tropical_pl.hpp"

namespace convrad {

// Open disc D^-(0, p^s0) or open annulus C^-(0; p^s1, p^s2) with rational
// log_p radii. Skeleton coordinate is s = log_p r.
struct Domain {
  enum class Kind { Disc, Annulus };
  Kind kind;
  Rat s0;      // disc only
  Rat s1, s2;  // annulus only, s1 < s2

  static Domain disc(const Rat& s0);
  static Domain annulus(const Rat& s1, const Rat& s2);

  Endpoint skeleton_lo() const;  // disc: -inf; annulus: s1
  Endpoint skeleton_hi() const;
  // Membership of the point eta_{c, p^s} (skeleton range taken closed).
  bool contains_point(const Rat& c, const Rat& s, const Prime& p) const;
};

// A weak triangulation restricted to radius marks: each mark s is the
// point eta_{p^s} on the skeleton.
struct Triangulation {
  std::vector<Rat> marks;  // kept sorted, deduplicated
  Triangulation() = default;
  Triangulation(std::vector<Rat> ms, const Domain& dom);
  bool contains(const Triangulation& other) const;  // superset test
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix matrix_identity(int m);
LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_derive(const LaurentMatrix& a);
bool matrix_is_zero(const LaurentMatrix& a);

// Rank-m differential module t d/dt-free form: connection matrix G over
// the domain; entries with negative degrees require an annulus.
struct DiffModule {
  Prime p;
  int rank;
  LaurentMatrix matrix;
  Domain domain;

  DiffModule(Prime prime, int m, LaurentMatrix g, Domain dom);
};

// G_1 = G, G_{n+1} = d(G_n) + G_n G; returns G_1..G_N.
std::vector<LaurentMatrix> iterate(const DiffModule& dm, int N);

struct RadiusEstimate {
  int order = 0;  // truncation order N
  TropicalPL on_skeleton;
  // Per piece of on_skeleton: the orders n attaining the min there
  // (0 stands for the cap).
  std::vector<std::vector<int>> provenance;
};

enum class Exec { Serial, Parallel };

// Upper bound for log_p R^emb at eta_{p^s}: s for annuli (the off-skeleton
// branch disc), constant s0 for discs.
TropicalPL cap_pl(const Domain& dom);
// Same cap at the point eta_{c, p^s}; on annuli this is max(s, abs_log(c)),
// the radius of the biggest disc centred there that avoids the puncture.
Rat cap_at(const Domain& dom, const Rat& c, const Rat& s, const Prime& p);

// log_p R^emb_N along the skeleton: min of the cap and the terms
// -(1/n)(log|G_n| + v_p(n!)), 1 <= n <= N; exact PL, non-increasing in N.
RadiusEstimate emb_radius_pl(const DiffModule& dm, int N, Exec exec = Exec::Serial);

// Certified (lower, upper) bounds for log_p R^emb_N at eta_{c, p^s}.
std::pair<Rat, Rat> radius_log_at(const DiffModule& dm, const Rat& c, const Rat& s,
                                  int N, int J);

// log_p rho_S along the skeleton for radius-mark triangulations: the
// identity s on annuli; on discs, constant at the lowest mark below it and
// s above (constant s0 for the empty triangulation).
TropicalPL rho_pl(const Domain& dom, const Triangulation& tri);

// log_p R_S = min(log R^emb - log rho_S, 0).
TropicalPL normalize(const RadiusEstimate& est, const Triangulation& tri,
                     const Domain& dom);

// R_{S'} = min(R_S / rho_{S',S}, 1) in log form: min(f - rho, 0).
TropicalPL retriangulate(const TropicalPL& f, const TropicalPL& rho);

}  // namespace convrad
