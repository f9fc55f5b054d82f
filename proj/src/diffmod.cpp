#include "convrad/diffmod.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace convrad {

Domain Domain::disc(const Rat& s0) {
  Domain d;
  d.kind = Kind::Disc;
  d.s0 = s0;
  return d;
}

Domain Domain::annulus(const Rat& s1, const Rat& s2) {
  if (!(s1 < s2)) throw std::invalid_argument("annulus requires s1 < s2");
  Domain d;
  d.kind = Kind::Annulus;
  d.s1 = s1;
  d.s2 = s2;
  return d;
}

Endpoint Domain::skeleton_lo() const {
  return kind == Kind::Disc ? Endpoint::neg_inf() : Endpoint::at(s1);
}

Endpoint Domain::skeleton_hi() const {
  return Endpoint::at(kind == Kind::Disc ? s0 : s2);
}

bool Domain::contains_point(const Rat& c, const Rat& s, const Prime& p) const {
  Rat b = (c == 0) ? s : std::max(s, abs_log(c, p));
  if (kind == Kind::Disc) return b <= s0;
  return s1 <= b && b <= s2;
}

Triangulation::Triangulation(std::vector<Rat> ms, const Domain& dom)
    : marks(std::move(ms)) {
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  for (const auto& m : marks) {
    bool ok = dom.kind == Domain::Kind::Disc ? (m < dom.s0)
                                             : (dom.s1 < m && m < dom.s2);
    if (!ok) throw std::invalid_argument("mark outside skeleton: " + rat_str(m));
  }
}

bool Triangulation::contains(const Triangulation& other) const {
  return std::includes(marks.begin(), marks.end(), other.marks.begin(),
                       other.marks.end());
}

LaurentMatrix matrix_identity(int m) {
  LaurentMatrix a(m, std::vector<LaurentPoly>(m));
  for (int i = 0; i < m; ++i) a[i][i] = LaurentPoly(Rat(1));
  return a;
}

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  LaurentMatrix r(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

LaurentMatrix matrix_derive(const LaurentMatrix& a) {
  LaurentMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = e.derive();
  return r;
}

bool matrix_is_zero(const LaurentMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

DiffModule::DiffModule(Prime prime, int m, LaurentMatrix g, Domain dom)
    : p(prime), rank(m), matrix(std::move(g)), domain(dom) {
  if (m < 1) throw std::invalid_argument("rank must be >= 1");
  if (matrix.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("matrix size mismatch");
  for (const auto& row : matrix) {
    if (row.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("matrix size mismatch");
    for (const auto& e : row)
      if (!e.is_zero() && e.min_degree() < 0 && domain.kind == Domain::Kind::Disc)
        throw std::invalid_argument("pole inside domain: negative degree on a disc");
  }
}

std::vector<LaurentMatrix> iterate(const DiffModule& dm, int N) {
  if (N < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<LaurentMatrix> gs;
  gs.reserve(N);
  gs.push_back(dm.matrix);
  for (int n = 1; n < N; ++n)
    gs.push_back(matrix_add(matrix_derive(gs.back()), matrix_mul(gs.back(), dm.matrix)));
  return gs;
}

TropicalPL cap_pl(const Domain& dom) {
  if (dom.kind == Domain::Kind::Disc)
    return TropicalPL::constant(dom.skeleton_lo(), dom.skeleton_hi(), dom.s0);
  return TropicalPL::identity(dom.skeleton_lo(), dom.skeleton_hi());
}

Rat cap_at(const Domain& dom, const Rat& c, const Rat& s, const Prime& p) {
  if (dom.kind == Domain::Kind::Disc) return dom.s0;
  return (c == 0) ? s : std::max(s, abs_log(c, p));
}

namespace {

// -(1/n)(log|G_n| + v_p(n!)) as a PL function of s; empty when G_n = 0.
std::optional<TropicalPL> order_term(const LaurentMatrix& gn, int n, const Prime& p,
                                     Endpoint lo, Endpoint hi) {
  std::optional<TropicalPL> norm;
  for (const auto& row : gn)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      TropicalPL g = gauss_norm_pl(e, p, lo, hi);
      norm = norm ? norm->pointwise_max(g) : g;
    }
  if (!norm) return std::nullopt;
  Rat vf(val_factorial(static_cast<std::uint64_t>(n), p));
  return norm->scaled(Rat(-1, n)).shifted(-vf / n);
}

}  // namespace

RadiusEstimate emb_radius_pl(const DiffModule& dm, int N, Exec exec) {
  const Endpoint lo = dm.domain.skeleton_lo(), hi = dm.domain.skeleton_hi();
  const auto gs = iterate(dm, N);

  std::vector<std::optional<TropicalPL>> terms(N);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= N; ++n)
      terms[n - 1] = order_term(gs[n - 1], n, dm.p, lo, hi);
  } else {
    for (int n = 1; n <= N; ++n)
      terms[n - 1] = order_term(gs[n - 1], n, dm.p, lo, hi);
  }

  TropicalPL result = cap_pl(dm.domain);
  for (const auto& t : terms)
    if (t) result = result.pointwise_min(*t);

  RadiusEstimate est{N, result, {}};
  const TropicalPL cap = cap_pl(dm.domain);
  est.provenance.resize(result.pieces().size());
  for (std::size_t i = 0; i < result.pieces().size(); ++i) {
    Rat rep = result.representative(i);
    Rat v = result.eval(rep);
    if (cap.eval(rep) == v) est.provenance[i].push_back(0);
    for (int n = 1; n <= N; ++n)
      if (terms[n - 1] && terms[n - 1]->eval(rep) == v)
        est.provenance[i].push_back(n);
  }
  return est;
}

std::pair<Rat, Rat> radius_log_at(const DiffModule& dm, const Rat& c, const Rat& s,
                                  int N, int J) {
  if (!dm.domain.contains_point(c, s, dm.p)) throw std::domain_error("out of domain");
  // For s >= abs_log(c) the point eta_{c,p^s} coincides with the skeleton
  // point eta_{p^s}; fold into the on-skeleton case.
  const bool on_skeleton = (c == 0) || s >= abs_log(c, dm.p);
  const Rat cap = cap_at(dm.domain, c, s, dm.p);
  const auto gs = iterate(dm, N);

  Rat lower = cap, upper = cap;
  for (int n = 1; n <= N; ++n) {
    std::optional<Rat> l_lo, l_hi;  // bounds on log|G_n| at the point
    auto raise = [](std::optional<Rat>& acc, const std::optional<Rat>& v) {
      if (v && (!acc || *v > *acc)) acc = *v;
    };
    bool zero = true;
    for (const auto& row : gs[n - 1])
      for (const auto& e : row) {
        if (e.is_zero()) continue;
        zero = false;
        if (on_skeleton) {
          auto v = gauss_norm_log(e, c == 0 ? s : std::max(s, abs_log(c, dm.p)), dm.p);
          raise(l_lo, v);
          raise(l_hi, v);
        } else {
          CertifiedLog b = recenter_norm_log(e, c, s, dm.p, J);
          raise(l_lo, b.lower);
          raise(l_hi, b.upper);
        }
      }
    if (zero) continue;
    Rat vf(val_factorial(static_cast<std::uint64_t>(n), dm.p));
    if (l_hi) lower = std::min(lower, Rat(-(*l_hi + vf) / n));
    if (l_lo) upper = std::min(upper, Rat(-(*l_lo + vf) / n));
    // l_lo empty (all truncated coefficients vanished) leaves the upper
    // bound for this n at +infinity; it simply does not constrain.
  }
  return {lower, upper};
}

TropicalPL rho_pl(const Domain& dom, const Triangulation& tri) {
  Endpoint lo = dom.skeleton_lo(), hi = dom.skeleton_hi();
  if (dom.kind == Domain::Kind::Annulus) return TropicalPL::identity(lo, hi);
  if (tri.marks.empty()) return TropicalPL::constant(lo, hi, dom.s0);
  const Rat& m1 = tri.marks.front();
  // Constant below the lowest mark (that component is a disc), s above.
  return TropicalPL(lo, hi, {m1},
                    {Affine{Rat(0), m1}, Affine{Rat(1), Rat(0)}});
}

TropicalPL normalize(const RadiusEstimate& est, const Triangulation& tri,
                     const Domain& dom) {
  return retriangulate(est.on_skeleton, rho_pl(dom, tri));
}

TropicalPL retriangulate(const TropicalPL& f, const TropicalPL& rho) {
  TropicalPL zero = TropicalPL::constant(f.lo(), f.hi(), Rat(0));
  return (f - rho).pointwise_min(zero);
}

}  // namespace convrad
