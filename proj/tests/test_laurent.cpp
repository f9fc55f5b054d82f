#include <doctest.h>

#include <random>

#include "convrad/laurent.hpp"

using namespace convrad;

namespace {

LaurentPoly random_poly(std::mt19937& rng, bool allow_negative) {
  auto rnd = [&](int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(rng);
  };
  LaurentPoly f;
  int terms = rnd(1, 4);
  for (int i = 0; i < terms; ++i) {
    int deg = rnd(allow_negative ? -3 : 0, 4);
    int num = rnd(-12, 12);
    int den = rnd(1, 8);
    if (num != 0) f.set(deg, f.coeff(deg) + Rat(num, den));
  }
  if (f.is_zero()) f.set(0, Rat(1));
  return f;
}

}  // namespace

TEST_CASE("parse and str round trip") {
  for (const char* text :
       {"0", "1", "-2*t", "t^3", "1 + 1/2*t^-2", "3/4*t^-1 - t + 5",
        "t^-3 + t^3", "-1/7"}) {
    LaurentPoly f = LaurentPoly::parse(text);
    CHECK(LaurentPoly::parse(f.str()) == f);
  }
  CHECK(LaurentPoly::parse("1+1/2*t^-2").coeff(-2) == Rat(1, 2));
  CHECK(LaurentPoly::parse("t").coeff(1) == Rat(1));
  CHECK(LaurentPoly::parse("-t^2").coeff(2) == Rat(-1));
  CHECK(LaurentPoly::parse("2t") == LaurentPoly::parse("2*t"));
  CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("1/0*t"), std::invalid_argument);
}

TEST_CASE("arithmetic and the Leibniz rule") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly f = random_poly(rng, true), g = random_poly(rng, true);
    CHECK((f * g).derive() == f.derive() * g + f * g.derive());
    CHECK(f + g == g + f);
    CHECK(f - f == LaurentPoly());
    CHECK(f * g == g * f);
  }
  CHECK(LaurentPoly::parse("t^-1").derive() == LaurentPoly::parse("-t^-2"));
  CHECK(LaurentPoly::parse("3").derive().is_zero());
}

TEST_CASE("gauss norm values and properties") {
  Prime two(2);
  // f = 2 + t at s: max(-1, s).
  LaurentPoly f = LaurentPoly::parse("2 + t");
  CHECK(gauss_norm_log(f, Rat(0), two) == Rat(0));
  CHECK(gauss_norm_log(f, Rat(-2), two) == Rat(-1));
  CHECK(!gauss_norm_log(LaurentPoly(), Rat(0), two).has_value());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng, true), b = random_poly(rng, true);
    Rat s(std::uniform_int_distribution<int>(-6, 6)(rng), 2);
    auto na = gauss_norm_log(a, s, two), nb = gauss_norm_log(b, s, two);
    // Multiplicativity (Gauss's lemma at eta_{0, p^s}).
    CHECK(gauss_norm_log(a * b, s, two) == *na + *nb);
    // Ultrametric inequality.
    auto nsum = gauss_norm_log(a + b, s, two);
    if (nsum) CHECK(*nsum <= std::max(*na, *nb));
  }
}

TEST_CASE("gauss_norm_pl agrees with pointwise values and is convex") {
  Prime two(2);
  std::mt19937 rng(31);
  Endpoint lo = Endpoint::at(Rat(-3)), hi = Endpoint::at(Rat(2));
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly f = random_poly(rng, true);
    TropicalPL g = gauss_norm_pl(f, two, lo, hi);
    CHECK(g.is_convex());  // max of affine functions
    for (int k = -6; k <= 4; ++k) {
      Rat s(k, 2);
      CHECK(g.eval(s) == *gauss_norm_log(f, s, two));
    }
  }
  CHECK_THROWS_AS(gauss_norm_pl(LaurentPoly(), two, lo, hi), std::domain_error);
}

TEST_CASE("recenter_norm_log: polynomial part is exact") {
  Prime two(2);
  // Pure polynomials recenter exactly by Taylor shift.
  LaurentPoly f = LaurentPoly::parse("1 + 2*t + t^3");
  CertifiedLog b = recenter_norm_log(f, Rat(1), Rat(-1), two, 4);
  CHECK(b.exact());
  // f(1 + u) = 4 + 5u + 3u^2 + u^3: norm at s = -1 is max(-2, -1+0, -2, -3) = -1.
  CHECK(*b.lower == Rat(-1));
}

TEST_CASE("recenter_norm_log: boundary point falls back to the Gauss norm") {
  Prime three(3);
  LaurentPoly f = LaurentPoly::parse("t^-2 + t");
  Rat A = abs_log(Rat(3), three);  // -1
  CertifiedLog b = recenter_norm_log(f, Rat(3), A, three, 6);
  CHECK(b.exact());
  CHECK(*b.lower == *gauss_norm_log(f, A, three));
}

TEST_CASE("recenter_norm_log: pole inside the disc is rejected") {
  Prime two(2);
  LaurentPoly f = LaurentPoly::parse("t^-1");
  // c = 4: branch point at -2; a disc of radius 2^-1 around it contains 0.
  CHECK_THROWS_AS(recenter_norm_log(f, Rat(4), Rat(-1), two, 4), std::domain_error);
  CHECK_THROWS_AS(recenter_norm_log(f, Rat(0), Rat(-1), two, 4), std::invalid_argument);
}

TEST_CASE("recenter_norm_log: bounds are ordered and monotone in J") {
  Prime three(3);
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly f = random_poly(rng, true);
    Rat c(3), s(-2);  // branch point abs_log(3) = -1 > s
    std::optional<Rat> prev_lo, prev_hi;
    for (int J : {1, 2, 4, 8, 16}) {
      CertifiedLog b = recenter_norm_log(f, c, s, three, J);
      if (b.lower && b.upper) CHECK(*b.lower <= *b.upper);
      if (prev_lo && b.lower) CHECK(*b.lower >= *prev_lo);
      if (prev_hi && b.upper) CHECK(*b.upper <= *prev_hi);
      if (b.lower) prev_lo = b.lower;
      if (b.upper) prev_hi = b.upper;
    }
  }
}

TEST_CASE("recenter_norm_log converges to exactness for deep probes") {
  Prime three(3);
  LaurentPoly f = LaurentPoly::parse("t^-2");
  CertifiedLog b = recenter_norm_log(f, Rat(3), Rat(-3), three, 12);
  CHECK(b.exact());
  // |t^-2| at eta_{3, 3^-3}: the t^-2 norm is |3^-2| = 3^2, log = 2.
  CHECK(*b.lower == Rat(2));
}
