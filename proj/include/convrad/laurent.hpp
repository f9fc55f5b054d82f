#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "convrad/padic.hpp"
#include "convrad/tropical_pl.hpp"

namespace convrad {

// Finitely supported map degree -> nonzero rational coefficient;
// negative degrees allowed.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& constant);
  static LaurentPoly monomial(std::int64_t degree, const Rat& coeff);

  // Terms "a/b*t^k" joined by '+' (or '-'), whitespace-insensitive,
  // e.g. "1 + 1/2*t^-2", "t^3", "-2*t".
  static LaurentPoly parse(const std::string& text);
  std::string str() const;

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::int64_t, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::int64_t degree) const;
  std::int64_t min_degree() const;  // throws on zero
  std::int64_t max_degree() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // d/dt.
  LaurentPoly derive() const;

  void set(std::int64_t degree, const Rat& coeff);  // erases on zero

 private:
  std::map<std::int64_t, Rat> coeffs_;
};

// log_p |f(eta_{0, p^s})| = max_k (-v_p(a_k) + k s); empty for f = 0.
std::optional<Rat> gauss_norm_log(const LaurentPoly& f, const Rat& s, const Prime& p);

// Symbolic form of the above on a given skeleton domain; throws on f = 0.
TropicalPL gauss_norm_pl(const LaurentPoly& f, const Prime& p, Endpoint lo, Endpoint hi);

// Certified two-sided bounds on log_p |f(eta_{c, p^s})| for c != 0.
// Exact Taylor shift of the polynomial part; negative powers expanded as
// c^-k (1+u/c)^-k truncated at J terms, tails bounded via |binom(-k,j)|_p <= 1
// and |u/c| <= p^(s - abs_log(c)) <= 1. lower is the exact Gauss norm of the
// truncated expansion (empty when every truncated coefficient vanishes);
// lower == upper whenever the tail bound sits at or below it.
struct CertifiedLog {
  std::optional<Rat> lower;  // empty = -infinity
  std::optional<Rat> upper;
  bool exact() const { return lower && upper && *lower == *upper; }
};
CertifiedLog recenter_norm_log(const LaurentPoly& f, const Rat& c, const Rat& s,
                               const Prime& p, int J);

}  // namespace convrad
