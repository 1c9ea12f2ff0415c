#pragma once

#include <optional>
#include <string>

#include "emsurf/polynomial.hpp"

namespace emsurf {

// 12^3, the constant of the curve eta^2 = xi^3 - 12^3.
inline const Integer kTwelveCubed = 1728;

// Element a(xi) + b(xi)*eta of the function field of the genus-1 curve
// eta^2 = xi^3 - 1728, kept in the unique normal form of degree <= 1 in eta.
// The relation eta^2 -> xi^3 - 1728 is applied inside multiplication, so
// values are always normalized by construction.
class BFieldElement {
 public:
  BFieldElement() = default;  // zero
  BFieldElement(const Rational& c);  // NOLINT: implicit constant embedding
  explicit BFieldElement(RationalFunction a);
  BFieldElement(RationalFunction a, RationalFunction b);

  static BFieldElement xi();
  static BFieldElement eta();

  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant(); }
  Rational constant_value() const;

  BFieldElement operator-() const;
  BFieldElement inverse() const;
  friend BFieldElement operator+(const BFieldElement&, const BFieldElement&);
  friend BFieldElement operator-(const BFieldElement&, const BFieldElement&);
  friend BFieldElement operator*(const BFieldElement&, const BFieldElement&);
  friend BFieldElement operator/(const BFieldElement&, const BFieldElement&);
  friend bool operator==(const BFieldElement&, const BFieldElement&);
  friend bool operator!=(const BFieldElement& f, const BFieldElement& g) { return !(f == g); }

  BFieldElement pow(long e) const;

  // The norm a^2 - b^2 (xi^3 - 1728) down to Q(xi); zero iff the element is zero.
  RationalFunction norm() const;

  std::string to_string() const;

 private:
  RationalFunction a_, b_;
};

// Places where valuations are taken: a finite place of Q(t) given by a monic
// irreducible polynomial, the place at infinity of t, and the origin o_B of
// the base curve (the point at infinity of the xi/eta model).
class Place {
 public:
  enum class Kind { FinitePoly, Infinity, OB };

  static Place finite(const MultiPoly& poly, Var v = Var::T);
  static Place infinity();
  static Place o_B();

  Kind kind() const { return kind_; }
  const MultiPoly& poly() const;
  Var variable() const { return var_; }
  long degree() const;
  std::string to_string() const;

 private:
  Place(Kind k, MultiPoly p, Var v) : kind_(k), poly_(std::move(p)), var_(v) {}
  Kind kind_;
  MultiPoly poly_;
  Var var_ = Var::T;
};

// nullopt encodes +infinity (the valuation of 0).
using Valuation = std::optional<long long>;

// Order of f at a place of Q(t): exact multiplicity of the place polynomial
// for finite places, deg(den) - deg(num) at infinity.
Valuation valuation(const RationalFunction& f, const Place& place);

// Order at o_B, from ord(xi) = -2, ord(eta) = -3. The even/odd split between
// the two components of the normal form makes the ultrametric minimum exact.
Valuation valuation(const BFieldElement& f, const Place& place);

}  // namespace emsurf
