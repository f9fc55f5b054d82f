#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "convrad/rational.hpp"

namespace convrad {

// One end of a (possibly unbounded) closed interval of rationals.
struct Endpoint {
  enum class Kind { NegInfinite, Finite, PosInfinite };
  Kind kind = Kind::Finite;
  Rat value;

  static Endpoint neg_inf() { return {Kind::NegInfinite, Rat(0)}; }
  static Endpoint pos_inf() { return {Kind::PosInfinite, Rat(0)}; }
  static Endpoint at(const Rat& v) { return {Kind::Finite, v}; }
  bool finite() const { return kind == Kind::Finite; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Affine {
  Rat slope;
  Rat intercept;
  Rat at(const Rat& s) const { return intercept + slope * s; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

// Exact one-variable piecewise-linear function on a closed rational
// interval (either end may be infinite). Continuous by invariant; kept in
// canonical form: no breakpoint joins two pieces of equal slope.
class TropicalPL {
 public:
  // The zero function on the whole line.
  TropicalPL() : lo_(Endpoint::neg_inf()), hi_(Endpoint::pos_inf()), pieces_{Affine{Rat(0), Rat(0)}} {}

  // pieces.size() == breakpoints.size() + 1; breakpoints strictly
  // increasing and interior to the domain; adjacent pieces must agree at
  // each breakpoint. Canonicalization merges equal-slope neighbours.
  TropicalPL(Endpoint lo, Endpoint hi, std::vector<Rat> breakpoints,
             std::vector<Affine> pieces);

  static TropicalPL affine(Endpoint lo, Endpoint hi, const Rat& slope,
                           const Rat& intercept);
  static TropicalPL constant(Endpoint lo, Endpoint hi, const Rat& value);
  // The identity map s -> s.
  static TropicalPL identity(Endpoint lo, Endpoint hi);

  const Endpoint& lo() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Affine>& pieces() const { return pieces_; }
  std::vector<Rat> slopes() const;

  bool contains(const Rat& s) const;
  Rat eval(const Rat& s) const;  // throws "out of domain"

  // Index of the piece containing s (ties at a breakpoint resolve right;
  // both pieces agree there anyway).
  std::size_t piece_index(const Rat& s) const;

  // A finite point interior to piece i, usable for sampling.
  Rat representative(std::size_t i) const;

  TropicalPL pointwise_min(const TropicalPL& g) const;
  TropicalPL pointwise_max(const TropicalPL& g) const;
  // alpha*this + beta*g.
  TropicalPL affine_combine(const TropicalPL& g, const Rat& alpha,
                            const Rat& beta) const;
  TropicalPL operator+(const TropicalPL& g) const;
  TropicalPL operator-(const TropicalPL& g) const;
  TropicalPL scaled(const Rat& alpha) const;
  TropicalPL shifted(const Rat& c) const;  // adds a constant

  bool is_concave() const;  // slopes non-increasing left to right
  bool is_convex() const;

  friend bool operator==(const TropicalPL&, const TropicalPL&) = default;

  // Serialized form: domain, slope list, breakpoint list, one anchor
  // value. Round-trips exactly through parse().
  std::string serialize() const;
  static TropicalPL parse(const std::string& text);

  // TSV sample grid "s\tvalue\tvalue_decimal" over [a,b] in `count`
  // steps; for unbounded domains the caller supplies finite a, b.
  std::string sample_tsv(const Rat& a, const Rat& b, int count) const;

 private:
  Endpoint lo_, hi_;
  std::vector<Rat> breaks_;
  std::vector<Affine> pieces_;
};

// Per-slope result of the m/i denominator test.
struct SlopeCertificate {
  bool pass = true;
  // Indices of pieces whose slope is not m/i with 1 <= i <= rank.
  std::vector<std::size_t> offending;
};

// Checks every slope is m/i with m integer and 1 <= i <= rank.
SlopeCertificate certify_slopes(const TropicalPL& f, int rank);

// min/max over a non-empty family with a common domain.
TropicalPL pointwise_min(const std::vector<TropicalPL>& fs);
TropicalPL pointwise_max(const std::vector<TropicalPL>& fs);

}  // namespace convrad
