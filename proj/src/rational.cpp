#include "convrad/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace convrad {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// cpp_int's string constructor rejects an explicit '+'.
Int parse_int_literal(const std::string& s) {
  return Int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(s))
      throw std::invalid_argument("bad rational literal: '" + text + "'");
    return Rat(parse_int_literal(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  Int d = parse_int_literal(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rat(parse_int_literal(num), d);
}

std::string rat_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double rat_double(const Rat& q) { return static_cast<double>(q); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Rat rat_floor(const Rat& q) { return Rat(floor_div(numerator(q), denominator(q))); }

}  // namespace convrad
