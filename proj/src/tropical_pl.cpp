#include "convrad/tropical_pl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace convrad {

namespace {

void check_domain(const Endpoint& lo, const Endpoint& hi) {
  if (lo.kind == Endpoint::Kind::PosInfinite || hi.kind == Endpoint::Kind::NegInfinite)
    throw std::invalid_argument("malformed domain");
  if (lo.finite() && hi.finite() && lo.value > hi.value)
    throw std::invalid_argument("empty domain");
}

bool below(const Endpoint& lo, const Rat& x) {
  return !lo.finite() || lo.value < x;
}
bool above(const Endpoint& hi, const Rat& x) {
  return !hi.finite() || hi.value > x;
}

}  // namespace

TropicalPL::TropicalPL(Endpoint lo, Endpoint hi, std::vector<Rat> breakpoints,
                       std::vector<Affine> pieces)
    : lo_(lo), hi_(hi), breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  check_domain(lo_, hi_);
  if (pieces_.size() != breaks_.size() + 1)
    throw std::invalid_argument("piece/breakpoint count mismatch");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (i > 0 && !(breaks_[i - 1] < breaks_[i]))
      throw std::invalid_argument("breakpoints not strictly increasing");
    if (!below(lo_, breaks_[i]) || !above(hi_, breaks_[i]))
      throw std::invalid_argument("breakpoint outside domain interior");
    if (pieces_[i].at(breaks_[i]) != pieces_[i + 1].at(breaks_[i]))
      throw std::invalid_argument("discontinuity at breakpoint " + rat_str(breaks_[i]));
  }
  // Canonical form: merge equal-slope neighbours.
  std::vector<Rat> cb;
  std::vector<Affine> cp{pieces_.front()};
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces_[i + 1].slope == cp.back().slope) continue;  // same line, merged
    cb.push_back(breaks_[i]);
    cp.push_back(pieces_[i + 1]);
  }
  breaks_ = std::move(cb);
  pieces_ = std::move(cp);
}

TropicalPL TropicalPL::affine(Endpoint lo, Endpoint hi, const Rat& slope,
                              const Rat& intercept) {
  return TropicalPL(lo, hi, {}, {Affine{slope, intercept}});
}

TropicalPL TropicalPL::constant(Endpoint lo, Endpoint hi, const Rat& value) {
  return affine(lo, hi, Rat(0), value);
}

TropicalPL TropicalPL::identity(Endpoint lo, Endpoint hi) {
  return affine(lo, hi, Rat(1), Rat(0));
}

std::vector<Rat> TropicalPL::slopes() const {
  std::vector<Rat> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.slope);
  return out;
}

bool TropicalPL::contains(const Rat& s) const {
  if (lo_.finite() && s < lo_.value) return false;
  if (hi_.finite() && s > hi_.value) return false;
  return true;
}

std::size_t TropicalPL::piece_index(const Rat& s) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s);
  return static_cast<std::size_t>(it - breaks_.begin());
}

Rat TropicalPL::eval(const Rat& s) const {
  if (!contains(s)) throw std::domain_error("out of domain: " + rat_str(s));
  return pieces_[piece_index(s)].at(s);
}

Rat TropicalPL::representative(std::size_t i) const {
  Endpoint a = (i == 0) ? lo_ : Endpoint::at(breaks_[i - 1]);
  Endpoint b = (i == breaks_.size()) ? hi_ : Endpoint::at(breaks_[i]);
  if (a.finite() && b.finite()) return (a.value + b.value) / 2;
  if (a.finite()) return a.value + 1;
  if (b.finite()) return b.value - 1;
  return Rat(0);
}

namespace {

// Shared combine sweep: refines the two piece lists over the common
// domain, adds crossing points when asked, and builds the result with a
// per-subinterval chooser.
template <typename Choose>
TropicalPL combine(const TropicalPL& f, const TropicalPL& g, bool add_crossings,
                   Choose choose) {
  if (f.lo() != g.lo() || f.hi() != g.hi())
    throw std::invalid_argument("incompatible domains");

  std::vector<Rat> cuts;
  cuts.insert(cuts.end(), f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  if (add_crossings) {
    // A crossing may only occur inside a subinterval where both are
    // affine; scanning whole pieces and filtering by domain is enough.
    for (const auto& a : f.pieces())
      for (const auto& b : g.pieces()) {
        if (a.slope == b.slope) continue;
        Rat x = (b.intercept - a.intercept) / (a.slope - b.slope);
        if (f.contains(x)) cuts.push_back(x);
      }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // Keep interior cuts only.
  std::vector<Rat> interior;
  for (const auto& x : cuts)
    if ((!f.lo().finite() || f.lo().value < x) && (!f.hi().finite() || f.hi().value > x))
      interior.push_back(x);

  std::vector<Affine> out;
  out.reserve(interior.size() + 1);
  for (std::size_t i = 0; i <= interior.size(); ++i) {
    Endpoint a = (i == 0) ? f.lo() : Endpoint::at(interior[i - 1]);
    Endpoint b = (i == interior.size()) ? f.hi() : Endpoint::at(interior[i]);
    Rat rep;
    if (a.finite() && b.finite())
      rep = (a.value + b.value) / 2;
    else if (a.finite())
      rep = a.value + 1;
    else if (b.finite())
      rep = b.value - 1;
    else
      rep = Rat(0);
    const Affine& pf = f.pieces()[f.piece_index(rep)];
    const Affine& pg = g.pieces()[g.piece_index(rep)];
    out.push_back(choose(pf, pg, rep));
  }
  return TropicalPL(f.lo(), f.hi(), std::move(interior), std::move(out));
}

}  // namespace

TropicalPL TropicalPL::pointwise_min(const TropicalPL& g) const {
  return combine(*this, g, true, [](const Affine& a, const Affine& b, const Rat& rep) {
    return a.at(rep) <= b.at(rep) ? a : b;
  });
}

TropicalPL TropicalPL::pointwise_max(const TropicalPL& g) const {
  return combine(*this, g, true, [](const Affine& a, const Affine& b, const Rat& rep) {
    return a.at(rep) >= b.at(rep) ? a : b;
  });
}

TropicalPL TropicalPL::affine_combine(const TropicalPL& g, const Rat& alpha,
                                      const Rat& beta) const {
  return combine(*this, g, false, [&](const Affine& a, const Affine& b, const Rat&) {
    return Affine{alpha * a.slope + beta * b.slope,
                  alpha * a.intercept + beta * b.intercept};
  });
}

TropicalPL TropicalPL::operator+(const TropicalPL& g) const {
  return affine_combine(g, Rat(1), Rat(1));
}

TropicalPL TropicalPL::operator-(const TropicalPL& g) const {
  return affine_combine(g, Rat(1), Rat(-1));
}

TropicalPL TropicalPL::scaled(const Rat& alpha) const {
  std::vector<Affine> ps;
  ps.reserve(pieces_.size());
  for (const auto& p : pieces_) ps.push_back({alpha * p.slope, alpha * p.intercept});
  return TropicalPL(lo_, hi_, breaks_, std::move(ps));
}

TropicalPL TropicalPL::shifted(const Rat& c) const {
  std::vector<Affine> ps;
  ps.reserve(pieces_.size());
  for (const auto& p : pieces_) ps.push_back({p.slope, p.intercept + c});
  return TropicalPL(lo_, hi_, breaks_, std::move(ps));
}

bool TropicalPL::is_concave() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].slope > pieces_[i - 1].slope) return false;
  return true;
}

bool TropicalPL::is_convex() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].slope < pieces_[i - 1].slope) return false;
  return true;
}

namespace {

std::string endpoint_str(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInfinite: return "-inf";
    case Endpoint::Kind::PosInfinite: return "+inf";
    default: return rat_str(e.value);
  }
}

Endpoint parse_endpoint(const std::string& s) {
  if (s == "-inf") return Endpoint::neg_inf();
  if (s == "+inf") return Endpoint::pos_inf();
  return Endpoint::at(parse_rat(s));
}

}  // namespace

std::string TropicalPL::serialize() const {
  std::ostringstream os;
  os << "pl " << endpoint_str(lo_) << " " << endpoint_str(hi_);
  os << " slopes";
  for (const auto& p : pieces_) os << " " << rat_str(p.slope);
  os << " breaks";
  for (const auto& b : breaks_) os << " " << rat_str(b);
  Rat anchor = representative(0);
  os << " anchor " << rat_str(anchor) << " " << rat_str(eval(anchor));
  return os.str();
}

TropicalPL TropicalPL::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  is >> tok;
  if (tok != "pl") throw std::invalid_argument("bad PL serialization");
  std::string lo_s, hi_s;
  is >> lo_s >> hi_s;
  Endpoint lo = parse_endpoint(lo_s), hi = parse_endpoint(hi_s);
  is >> tok;
  if (tok != "slopes") throw std::invalid_argument("bad PL serialization");
  std::vector<Rat> slopes;
  while (is >> tok && tok != "breaks") slopes.push_back(parse_rat(tok));
  std::vector<Rat> breaks;
  while (is >> tok && tok != "anchor") breaks.push_back(parse_rat(tok));
  std::string ax, av;
  if (!(is >> ax >> av)) throw std::invalid_argument("bad PL serialization");
  Rat anchor_x = parse_rat(ax), anchor_v = parse_rat(av);
  if (slopes.size() != breaks.size() + 1)
    throw std::invalid_argument("bad PL serialization");
  // Rebuild intercepts left to right from the anchor (anchor lies in piece 0).
  std::vector<Affine> pieces(slopes.size());
  pieces[0] = {slopes[0], anchor_v - slopes[0] * anchor_x};
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    Rat v = pieces[i - 1].at(breaks[i - 1]);
    pieces[i] = {slopes[i], v - slopes[i] * breaks[i - 1]};
  }
  return TropicalPL(lo, hi, std::move(breaks), std::move(pieces));
}

std::string TropicalPL::sample_tsv(const Rat& a, const Rat& b, int count) const {
  if (count < 2) throw std::invalid_argument("need at least 2 samples");
  std::ostringstream os;
  os << "s\tvalue\tvalue_decimal\n";
  for (int i = 0; i < count; ++i) {
    Rat s = a + (b - a) * Rat(i, count - 1);
    Rat v = eval(s);
    os << rat_str(s) << "\t" << rat_str(v) << "\t" << rat_double(v) << "\n";
  }
  return os.str();
}

SlopeCertificate certify_slopes(const TropicalPL& f, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  SlopeCertificate cert;
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (denominator(ps[i].slope) > rank) {
      cert.pass = false;
      cert.offending.push_back(i);
    }
  }
  return cert;
}

TropicalPL pointwise_min(const std::vector<TropicalPL>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty family");
  TropicalPL acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = acc.pointwise_min(fs[i]);
  return acc;
}

TropicalPL pointwise_max(const std::vector<TropicalPL>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty family");
  TropicalPL acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = acc.pointwise_max(fs[i]);
  return acc;
}

}  // namespace convrad
