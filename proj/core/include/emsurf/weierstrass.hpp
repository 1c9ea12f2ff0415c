#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "emsurf/bfield.hpp"
#include "emsurf/finite_field.hpp"
#include "emsurf/polynomial.hpp"

namespace emsurf {

// Embedding of small integer constants into each supported coefficient field.
inline Rational constant_like(const Rational&, const Integer& n) { return Rational(n); }
inline RationalFunction constant_like(const RationalFunction&, const Integer& n) {
  return RationalFunction(Rational(n));
}
inline BFieldElement constant_like(const BFieldElement&, const Integer& n) {
  return BFieldElement(Rational(n));
}
inline FFElement constant_like(const FFElement& model, const Integer& n) {
  return model.field().from_integer(n);
}

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const RationalFunction& x) { return x.is_zero(); }
inline bool is_zero_value(const BFieldElement& x) { return x.is_zero(); }
inline bool is_zero_value(const FFElement& x) { return x.is_zero(); }

// Short Weierstrass model y^2 = x^3 + a4 x + a6 over a pluggable coefficient
// field (char != 2,3 throughout).
template <class K>
struct WeierstrassCurve {
  K a4, a6;
};

template <class K>
K discriminant(const WeierstrassCurve<K>& c) {
  K four = constant_like(c.a4, 4);
  K twenty_seven = constant_like(c.a4, 27);
  K minus_16 = constant_like(c.a4, -16);
  return minus_16 * (four * c.a4 * c.a4 * c.a4 + twenty_seven * c.a6 * c.a6);
}

template <class K>
K c4_invariant(const WeierstrassCurve<K>& c) {
  return constant_like(c.a4, -48) * c.a4;
}

template <class K>
K c6_invariant(const WeierstrassCurve<K>& c) {
  return constant_like(c.a6, -864) * c.a6;
}

template <class K>
K j_invariant(const WeierstrassCurve<K>& c) {
  K d = discriminant(c);
  if (is_zero_value(d)) throw std::domain_error("j_invariant: singular curve");
  K cc4 = c4_invariant(c);
  return cc4 * cc4 * cc4 / d;
}

// Long form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 rescaled to the
// short model y^2 = x^3 - 27 c4 x - 54 c6 (same j; discriminant scales by 6^12).
template <class K>
WeierstrassCurve<K> short_model_from_long(const K& a1, const K& a2, const K& a3, const K& a4,
                                          const K& a6) {
  K b2 = a1 * a1 + constant_like(a1, 4) * a2;
  K b4 = constant_like(a1, 2) * a4 + a1 * a3;
  K b6 = a3 * a3 + constant_like(a1, 4) * a6;
  K c4 = b2 * b2 - constant_like(a1, 24) * b4;
  K c6 = -(b2 * b2 * b2) + constant_like(a1, 36) * b2 * b4 - constant_like(a1, 216) * b6;
  return WeierstrassCurve<K>{constant_like(a1, -27) * c4, constant_like(a1, -54) * c6};
}

// Legendre curve y^2 = x(x-1)(x-lambda) depressed to the short model.
template <class K>
WeierstrassCurve<K> legendre_curve(const K& lambda) {
  K zero = constant_like(lambda, 0);
  K one = constant_like(lambda, 1);
  return short_model_from_long<K>(zero, -(one + lambda), zero, lambda, zero);
}

// The displayed Weierstrass model of the Hessian cubic with parameter mu:
// y^2 = x^3 - 27 mu (mu^3 + 8) x + 54 (mu^6 - 20 mu^3 - 8).
template <class K>
WeierstrassCurve<K> hessian_weierstrass_model(const K& mu) {
  K mu3 = mu * mu * mu;
  K a4 = constant_like(mu, -27) * mu * (mu3 + constant_like(mu, 8));
  K a6 = constant_like(mu, 54) *
         (mu3 * mu3 - constant_like(mu, 20) * mu3 - constant_like(mu, 8));
  return WeierstrassCurve<K>{a4, a6};
}

// The elliptic curve E: y^2 = x^3 - 27 xi x - 54 eta over the function field
// of B, and the K3 model X: y^2 = x^3 - 27 (t^2+1728)^3 x - 54 t (t^2+1728)^4.
WeierstrassCurve<BFieldElement> curve_E_over_B();
WeierstrassCurve<RationalFunction> curve_X_over_P1();

// Specialization of E at a base point (xi0, eta0) in F_q.
WeierstrassCurve<FFElement> specialize_E(const FFElement& xi0, const FFElement& eta0);

// y^2 = x^3 - 1728 (the base curve B) over F_q.
WeierstrassCurve<FFElement> curve_B_over(const FiniteField& Fq);

struct PointCount {
  std::int64_t q = 0;
  std::int64_t count = 0;  // including points at infinity
  std::int64_t trace = 0;  // a_q = q + 1 - count
  bool hasse_bound_ok() const { return trace * trace <= 4 * q; }
};

// Naive character-sum count N = q + 1 + sum_x chi(x^3 + a4 x + a6), O(q).
PointCount count_points(const WeierstrassCurve<FFElement>& c);

template <class K>
WeierstrassCurve<K> quadratic_twist(const WeierstrassCurve<K>& c, const K& d) {
  if (is_zero_value(d)) throw std::invalid_argument("quadratic_twist: twisting by zero");
  return WeierstrassCurve<K>{d * d * c.a4, d * d * d * c.a6};
}

enum class IsomorphismClass {
  Isomorphic,
  JMismatch,
  TwistClassMismatch,
};

const char* to_string(IsomorphismClass c);

IsomorphismClass is_isomorphic(const WeierstrassCurve<FFElement>& c1,
                               const WeierstrassCurve<FFElement>& c2);
IsomorphismClass is_isomorphic(const WeierstrassCurve<Rational>& c1,
                               const WeierstrassCurve<Rational>& c2);

// Homogeneous plane cubic in X, Y, Z with rational coefficients.
class PlaneCubic {
 public:
  explicit PlaneCubic(MultiPoly form);
  static PlaneCubic hesse(const Rational& mu);  // X^3 + Y^3 + Z^3 - 3 mu XYZ

  const MultiPoly& form() const { return form_; }
  Rational evaluate(const std::array<Rational, 3>& point) const;
  std::array<Rational, 3> gradient(const std::array<Rational, 3>& point) const;
  Rational hessian_determinant(const std::array<Rational, 3>& point) const;

 private:
  MultiPoly form_;
};

// Reduction of a smooth plane cubic with a rational flex to a short
// Weierstrass model with the same j-invariant. Throws if the point is not an
// inflection point of the cubic or if the cubic is singular.
WeierstrassCurve<Rational> nagell_reduce(const PlaneCubic& cubic,
                                         const std::array<Rational, 3>& flex);

}  // namespace emsurf
