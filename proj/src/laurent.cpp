#include "convrad/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace convrad {

LaurentPoly::LaurentPoly(const Rat& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(std::int64_t degree, const Rat& coeff) {
  LaurentPoly f;
  if (coeff != 0) f.coeffs_[degree] = coeff;
  return f;
}

Rat LaurentPoly::coeff(std::int64_t degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

std::int64_t LaurentPoly::min_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set(std::int64_t degree, const Rat& coeff) {
  if (coeff == 0)
    coeffs_.erase(degree);
  else
    coeffs_[degree] = coeff;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, a] : o.coeffs_) r.set(k, r.coeff(k) + a);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, a] : o.coeffs_) r.set(k, r.coeff(k) - a);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [k, a] : coeffs_)
    for (const auto& [l, b] : o.coeffs_) r.set(k + l, r.coeff(k + l) + a * b);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [k, a] : coeffs_) r.coeffs_[k] = a * c;
  return r;
}

LaurentPoly LaurentPoly::derive() const {
  LaurentPoly r;
  for (const auto& [k, a] : coeffs_)
    if (k != 0) r.coeffs_[k - 1] = a * k;
  return r;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : coeffs_) {
    if (!first) os << (a > 0 ? " + " : " - ");
    Rat mag = (!first && a < 0) ? Rat(-a) : a;
    first = false;
    if (k == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "t";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

struct TermParser {
  // One term: [rational] ['*'] ['t' ['^' int]]
  static std::pair<std::int64_t, Rat> parse(const std::string& term,
                                            const std::string& whole) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + whole + "'");
    std::size_t tpos = term.find('t');
    if (tpos == std::string::npos) return {0, parse_rat(term)};
    std::string coef_part = term.substr(0, tpos);
    if (!coef_part.empty() && coef_part.back() == '*')
      coef_part.pop_back();
    Rat coef(1);
    if (coef_part == "-")
      coef = -1;
    else if (!coef_part.empty())
      coef = parse_rat(coef_part);
    std::string rest = term.substr(tpos + 1);
    std::int64_t deg = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw std::invalid_argument("bad term '" + term + "'");
      deg = std::stoll(rest.substr(1));
    }
    return {deg, coef};
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return LaurentPoly();
  // Split on top-level +/-; a sign right after '^' or at position 0 binds
  // to the exponent / leading coefficient.
  std::vector<std::string> terms;
  std::vector<int> signs;
  std::string cur;
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool splitter = (ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' &&
                    s[i - 1] != '+' && s[i - 1] != '-' && s[i - 1] != '/' &&
                    s[i - 1] != '*';
    if (splitter) {
      terms.push_back(cur);
      signs.push_back(sign);
      cur.clear();
      sign = (ch == '-') ? -1 : 1;
    } else {
      cur.push_back(ch);
    }
  }
  terms.push_back(cur);
  signs.push_back(sign);
  LaurentPoly f;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto [deg, coef] = TermParser::parse(terms[i], text);
    f.set(deg, f.coeff(deg) + Rat(signs[i]) * coef);
  }
  return f;
}

std::optional<Rat> gauss_norm_log(const LaurentPoly& f, const Rat& s, const Prime& p) {
  std::optional<Rat> best;
  for (const auto& [k, a] : f.coeffs()) {
    Rat v = Rat(-valp(a, p)) + Rat(k) * s;
    if (!best || v > *best) best = v;
  }
  return best;
}

TropicalPL gauss_norm_pl(const LaurentPoly& f, const Prime& p, Endpoint lo, Endpoint hi) {
  if (f.is_zero()) throw std::domain_error("norm of zero");
  std::vector<TropicalPL> terms;
  terms.reserve(f.coeffs().size());
  for (const auto& [k, a] : f.coeffs())
    terms.push_back(TropicalPL::affine(lo, hi, Rat(k), Rat(-valp(a, p))));
  return pointwise_max(terms);
}

namespace {

// binom(-m, j) = (-1)^j binom(m+j-1, j); a p-adic integer for m >= 1.
Rat neg_binom(std::int64_t m, std::int64_t j) {
  Rat b(1);
  for (std::int64_t i = 0; i < j; ++i) b *= Rat(-m - i, i + 1);
  return b;
}

Rat pos_binom(std::int64_t k, std::int64_t j) {
  Rat b(1);
  for (std::int64_t i = 0; i < j; ++i) b *= Rat(k - i, i + 1);
  return b;
}

Rat rat_pow(const Rat& c, std::int64_t e) {
  Rat r(1);
  Rat base = e >= 0 ? c : Rat(1) / c;
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
  return r;
}

}  // namespace

CertifiedLog recenter_norm_log(const LaurentPoly& f, const Rat& c, const Rat& s,
                               const Prime& p, int J) {
  if (c == 0) throw std::invalid_argument("recenter at zero");
  if (J < 1) throw std::invalid_argument("truncation order must be >= 1");
  if (f.is_zero()) return {};
  const Rat A = abs_log(c, p);
  const bool has_neg = f.min_degree() < 0;
  if (has_neg && s > A) throw std::domain_error("pole inside disc");
  if (has_neg && s == A) {
    // eta_{c, p^A} = eta_{0, p^A}: the Shilov point of the same disc; the
    // recentred series does not converge there but the norm is exact.
    auto v = gauss_norm_log(f, s, p);
    return {v, v};
  }

  // Exact coefficients of the u-expansion, u = t - c.
  std::map<std::int64_t, Rat> coef;
  auto add = [&](std::int64_t j, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = coef.try_emplace(j, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) coef.erase(it);
    }
  };
  std::optional<Rat> tail;  // bound on everything beyond the truncation
  auto raise = [](std::optional<Rat>& acc, const Rat& v) {
    if (!acc || v > *acc) acc = v;
  };
  for (const auto& [k, a] : f.coeffs()) {
    if (k >= 0) {
      for (std::int64_t j = 0; j <= k; ++j)
        add(j, a * pos_binom(k, j) * rat_pow(c, k - j));
    } else {
      std::int64_t m = -k;
      for (std::int64_t j = 0; j < J; ++j)
        add(j, a * neg_binom(m, j) * rat_pow(c, k - j));
      // |a binom(-m,j) c^{-m-j} u^j| <= |a| p^{-mA} p^{j(s-A)}, j >= J.
      raise(tail, Rat(-valp(a, p)) - Rat(m) * A + Rat(J) * (s - A));
    }
  }

  std::optional<Rat> exact_max;   // degrees < J (or all, without negative part)
  std::optional<Rat> beyond_max;  // exact polynomial coefficients at degrees >= J
  for (const auto& [j, v] : coef) {
    Rat term = Rat(-valp(v, p)) + Rat(j) * s;
    if (!has_neg || j < J)
      raise(exact_max, term);
    else
      raise(beyond_max, term);
  }

  if (!has_neg) return {exact_max, exact_max};
  // Degrees < J are exact and degree-disjoint from the rest, so the norm is
  // max(exact_max, |rest|) with |rest| <= max(beyond_max, tail).
  std::optional<Rat> upper = exact_max;
  if (beyond_max) raise(upper, *beyond_max);
  if (tail) raise(upper, *tail);
  return {exact_max, upper};
}

}  // namespace convrad
