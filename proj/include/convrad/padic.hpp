#pragma once

#include <cstdint>
#include <optional>

#include "convrad/rational.hpp"

namespace convrad {

// A certified prime. Inputs are small, so trial division suffices.
class Prime {
 public:
  explicit Prime(std::int64_t p);
  std::int64_t value() const { return p_; }
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

// Exact p-adic valuation of a nonzero rational. Throws on zero;
// callers that need v_p(0) = +infinity use ValuedRational.
std::int64_t valp(const Rat& q, const Prime& p);

// v_p(n!) = sum_{i>=1} floor(n/p^i).
std::int64_t val_factorial(std::uint64_t n, const Prime& p);

// Log-scale convention used project-wide: all logarithms are base p,
// abs_log(q) = -v_p(q), so abs_log(p) = -1.
Rat abs_log(const Rat& q, const Prime& p);

// A rational carrying its exact valuation; zero is distinguished with
// v = +infinity (empty optional).
class ValuedRational {
 public:
  ValuedRational(const Rat& value, const Prime& p);

  const Rat& value() const { return value_; }
  bool is_zero() const { return !val_.has_value(); }
  bool is_infinite_val() const { return !val_.has_value(); }
  // Valuation of a nonzero value; throws for the distinguished zero.
  std::int64_t val() const;

  ValuedRational operator*(const ValuedRational& o) const;
  ValuedRational operator+(const ValuedRational& o) const;

 private:
  ValuedRational(Rat value, std::optional<std::int64_t> val, Prime p)
      : value_(std::move(value)), val_(val), p_(p) {}
  Rat value_;
  std::optional<std::int64_t> val_;
  Prime p_;
};

}  // namespace convrad
