#include "convrad/padic.hpp"

#include <stdexcept>

namespace convrad {

Prime::Prime(std::int64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

namespace {

std::int64_t valp_int(Int n, std::int64_t p) {
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::int64_t valp(const Rat& q, const Prime& p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  return valp_int(numerator(q), p.value()) - valp_int(denominator(q), p.value());
}

std::int64_t val_factorial(std::uint64_t n, const Prime& p) {
  std::int64_t v = 0;
  std::uint64_t q = n;
  while (q > 0) {
    q /= static_cast<std::uint64_t>(p.value());
    v += static_cast<std::int64_t>(q);
  }
  return v;
}

Rat abs_log(const Rat& q, const Prime& p) { return Rat(-valp(q, p)); }

ValuedRational::ValuedRational(const Rat& value, const Prime& p)
    : value_(value), p_(p) {
  if (value != 0) val_ = valp(value, p);
}

std::int64_t ValuedRational::val() const {
  if (!val_) throw std::domain_error("valuation of zero");
  return *val_;
}

ValuedRational ValuedRational::operator*(const ValuedRational& o) const {
  if (is_zero() || o.is_zero()) return ValuedRational(Rat(0), std::nullopt, p_);
  return ValuedRational(value_ * o.value_, *val_ + *o.val_, p_);
}

ValuedRational ValuedRational::operator+(const ValuedRational& o) const {
  return ValuedRational(value_ + o.value_, p_);
}

}  // namespace convrad
