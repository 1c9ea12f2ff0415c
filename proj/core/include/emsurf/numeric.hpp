#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

namespace emsurf {

// Exact arbitrary-precision scalars. cpp_int is sign+magnitude with
// canonical limbs; cpp_rational keeps gcd(num,den)=1 and den>0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

// Deterministic primality by trial division up to sqrt(n).
// All moduli this project touches are < 10^5, so this is never a bottleneck.
bool is_prime(std::int64_t n);

Integer pow_integer(const Integer& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

// Exact square root if n is a perfect square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);
std::optional<Rational> rational_sqrt_exact(const Rational& x);

Integer gcd_integer(Integer a, Integer b);

}  // namespace emsurf
