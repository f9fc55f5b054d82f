#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace convrad {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "a" or "a/b" with optional sign; rejects anything else, including
// zero denominators and floating-point literals.
Rat parse_rat(const std::string& text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string rat_str(const Rat& q);

// Presentation only; never feeds back into a verdict.
double rat_double(const Rat& q);

Int floor_div(const Int& a, const Int& b);
Rat rat_floor(const Rat& q);

}  // namespace convrad
