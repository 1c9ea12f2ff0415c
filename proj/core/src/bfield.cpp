#include "emsurf/bfield.hpp"

#include <stdexcept>

namespace emsurf {

namespace {

const RationalFunction& curve_rhs() {
  // xi^3 - 1728 as a rational function in xi.
  static const RationalFunction rhs = [] {
    MultiPoly p = MultiPoly::variable(Var::Xi, 3) - MultiPoly::constant(Rational(kTwelveCubed));
    return RationalFunction(p);
  }();
  return rhs;
}

void require_xi_only(const RationalFunction& f, const char* what) {
  if (!f.num().is_univariate_in(Var::Xi) || !f.den().is_univariate_in(Var::Xi))
    throw std::invalid_argument(std::string("BFieldElement: ") + what +
                                " must be a rational function in xi");
}

}  // namespace

BFieldElement::BFieldElement(const Rational& c) : a_(c), b_() {}

BFieldElement::BFieldElement(RationalFunction a) : a_(std::move(a)), b_() {
  require_xi_only(a_, "coefficient");
}

BFieldElement::BFieldElement(RationalFunction a, RationalFunction b)
    : a_(std::move(a)), b_(std::move(b)) {
  require_xi_only(a_, "coefficient");
  require_xi_only(b_, "coefficient");
}

BFieldElement BFieldElement::xi() { return BFieldElement(RationalFunction::variable(Var::Xi)); }

BFieldElement BFieldElement::eta() {
  return BFieldElement(RationalFunction(Rational(0)), RationalFunction(Rational(1)));
}

Rational BFieldElement::constant_value() const {
  if (!is_constant()) throw std::domain_error("BFieldElement: not a constant");
  return a_.constant_value();
}

BFieldElement BFieldElement::operator-() const { return BFieldElement(-a_, -b_); }

RationalFunction BFieldElement::norm() const { return a_ * a_ - b_ * b_ * curve_rhs(); }

BFieldElement BFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("BFieldElement: inverse of zero");
  // (a + b eta)^-1 = (a - b eta) / (a^2 - b^2 (xi^3 - 1728)); the norm is
  // nonzero because xi^3 - 1728 is not a square in Q(xi).
  RationalFunction n = norm();
  return BFieldElement(a_ / n, -b_ / n);
}

BFieldElement operator+(const BFieldElement& f, const BFieldElement& g) {
  return BFieldElement(f.a_ + g.a_, f.b_ + g.b_);
}

BFieldElement operator-(const BFieldElement& f, const BFieldElement& g) {
  return BFieldElement(f.a_ - g.a_, f.b_ - g.b_);
}

BFieldElement operator*(const BFieldElement& f, const BFieldElement& g) {
  // (a1 + b1 eta)(a2 + b2 eta) = a1 a2 + b1 b2 (xi^3 - 1728) + (a1 b2 + a2 b1) eta.
  return BFieldElement(f.a_ * g.a_ + f.b_ * g.b_ * curve_rhs(), f.a_ * g.b_ + g.a_ * f.b_);
}

BFieldElement operator/(const BFieldElement& f, const BFieldElement& g) {
  return f * g.inverse();
}

bool operator==(const BFieldElement& f, const BFieldElement& g) {
  return f.a_ == g.a_ && f.b_ == g.b_;
}

BFieldElement BFieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BFieldElement r(Rational(1));
  BFieldElement b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

std::string BFieldElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (!a_.is_zero()) s = a_.to_string();
  if (!b_.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "(" + b_.to_string() + ")*eta";
  }
  return s;
}

Place Place::finite(const MultiPoly& poly, Var v) {
  if (!poly.is_univariate_in(v) || poly.degree(v) < 1)
    throw std::invalid_argument("place: finite place needs a univariate polynomial");
  MultiPoly p = poly.primitive_part();
  // Monic normalization.
  Rational lead;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[static_cast<std::size_t>(static_cast<int>(v))] == p.degree(v)) lead = c;
  }
  p = (Rational(1) / lead) * p;
  if (!is_irreducible_over_Q(p, v))
    throw std::invalid_argument("place: polynomial is reducible over Q");
  return Place(Kind::FinitePoly, std::move(p), v);
}

Place Place::infinity() { return Place(Kind::Infinity, MultiPoly{}, Var::T); }

Place Place::o_B() { return Place(Kind::OB, MultiPoly{}, Var::Xi); }

const MultiPoly& Place::poly() const {
  if (kind_ != Kind::FinitePoly) throw std::logic_error("place: no polynomial at this place");
  return poly_;
}

long Place::degree() const {
  switch (kind_) {
    case Kind::FinitePoly:
      return poly_.degree(var_);
    case Kind::Infinity:
    case Kind::OB:
      return 1;
  }
  return 1;
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::FinitePoly:
      return "(" + poly_.to_string() + ")";
    case Kind::Infinity:
      return "infinity";
    case Kind::OB:
      return "o_B";
  }
  return "?";
}

namespace {

long long multiplicity_of(const MultiPoly& f, const MultiPoly& p) {
  long long ord = 0;
  MultiPoly r = f;
  while (true) {
    auto q = divide_exact(r, p);
    if (!q) return ord;
    r = *q;
    ++ord;
  }
}

// Order at o_B of a rational function of xi alone: o_B sits over xi = infinity
// with ramification index 2.
long long ob_order_of_xi_part(const RationalFunction& f) {
  return -2 * f.degree_in(Var::Xi);
}

}  // namespace

Valuation valuation(const RationalFunction& f, const Place& place) {
  if (f.is_zero()) return std::nullopt;
  switch (place.kind()) {
    case Place::Kind::FinitePoly: {
      Var v = place.variable();
      if (!f.num().is_univariate_in(v) || !f.den().is_univariate_in(v))
        throw std::invalid_argument("valuation: operand not a function of the place variable");
      return multiplicity_of(f.num(), place.poly()) - multiplicity_of(f.den(), place.poly());
    }
    case Place::Kind::Infinity: {
      Var v = place.variable();
      return f.den().degree(v) - f.num().degree(v);
    }
    case Place::Kind::OB:
      throw std::invalid_argument("valuation: o_B applies to elements of the function field of B");
  }
  throw std::logic_error("valuation: unknown place kind");
}

Valuation valuation(const BFieldElement& f, const Place& place) {
  if (place.kind() != Place::Kind::OB)
    throw std::invalid_argument("valuation: BFieldElement valuations are taken at o_B");
  if (f.is_zero()) return std::nullopt;
  // ord(a + b eta) = min(ord a, ord b - 3); the first part is even and the
  // second odd, so the minimum is never a cancellation.
  if (f.b().is_zero()) return ob_order_of_xi_part(f.a());
  long long vb = ob_order_of_xi_part(f.b()) - 3;
  if (f.a().is_zero()) return vb;
  return std::min(ob_order_of_xi_part(f.a()), vb);
}

}  // namespace emsurf
