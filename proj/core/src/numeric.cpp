#include "emsurf/numeric.hpp"

#include <stdexcept>

namespace emsurf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
  Integer r = 1;
  Integer b = base;
  unsigned long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("pow_rational: negative power of zero");
    return Rational(1) / pow_rational(base, -exp);
  }
  Rational r = 1;
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<Rational> rational_sqrt_exact(const Rational& x) {
  if (x < 0) return std::nullopt;
  auto n = integer_sqrt_exact(num(x));
  if (!n) return std::nullopt;
  auto d = integer_sqrt_exact(den(x));
  if (!d) return std::nullopt;
  return Rational(*n) / Rational(*d);
}

Integer gcd_integer(Integer a, Integer b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace emsurf
