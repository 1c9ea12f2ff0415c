#include "emsurf/weierstrass.hpp"

#include <numeric>

namespace emsurf {

WeierstrassCurve<BFieldElement> curve_E_over_B() {
  BFieldElement xi = BFieldElement::xi();
  BFieldElement eta = BFieldElement::eta();
  return {BFieldElement(Rational(-27)) * xi, BFieldElement(Rational(-54)) * eta};
}

WeierstrassCurve<RationalFunction> curve_X_over_P1() {
  RationalFunction t = RationalFunction::variable(Var::T);
  RationalFunction s = t * t + RationalFunction(Rational(kTwelveCubed));
  return {RationalFunction(Rational(-27)) * s.pow(3),
          RationalFunction(Rational(-54)) * t * s.pow(4)};
}

WeierstrassCurve<FFElement> specialize_E(const FFElement& xi0, const FFElement& eta0) {
  return {constant_like(xi0, -27) * xi0, constant_like(eta0, -54) * eta0};
}

WeierstrassCurve<FFElement> curve_B_over(const FiniteField& Fq) {
  return {Fq.zero(), Fq.from_integer(-kTwelveCubed)};
}

PointCount count_points(const WeierstrassCurve<FFElement>& c) {
  if (is_zero_value(discriminant(c))) throw std::domain_error("count_points: singular curve");
  const auto& data = *c.a4.field().data();
  const auto a4 = data.coords_of(c.a4.index());
  const auto a6 = data.coords_of(c.a6.index());
  const std::int64_t q = data.q;

  std::int64_t sum = 0;
  data.ensure_tables();
  for (std::int64_t i = 0; i < q; ++i) {
    auto x = data.coords_of(i);
    auto fx = data.add(data.add(data.mul(data.mul(x, x), x), data.mul(a4, x)), a6);
    sum += data.chi_table[static_cast<std::size_t>(data.index_of(fx))];
  }
  PointCount pc;
  pc.q = q;
  pc.count = q + 1 + sum;
  pc.trace = q + 1 - pc.count;
  return pc;
}

const char* to_string(IsomorphismClass c) {
  switch (c) {
    case IsomorphismClass::Isomorphic:
      return "isomorphic";
    case IsomorphismClass::JMismatch:
      return "j-mismatch";
    case IsomorphismClass::TwistClassMismatch:
      return "twist-class-mismatch";
  }
  return "?";
}

namespace {

// x an n-th power in F_q* iff x^((q-1)/gcd(n,q-1)) = 1.
bool is_nth_power(const FFElement& x, std::int64_t n) {
  std::int64_t q = x.field().size();
  std::int64_t g = std::gcd(n, q - 1);
  return x.pow((q - 1) / g) == x.field().one();
}

std::optional<Integer> nth_root_exact(const Integer& x, unsigned n) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Integer(0);
  Integer lo = 0, hi = x + 1;
  while (lo + 1 < hi) {
    Integer mid = (lo + hi) / 2;
    if (pow_integer(mid, n) <= x)
      lo = mid;
    else
      hi = mid;
  }
  if (pow_integer(lo, n) == x) return lo;
  return std::nullopt;
}

bool rational_is_nth_power(const Rational& x, unsigned n) {
  if (x == 0) return true;
  if (x < 0) return false;
  return nth_root_exact(num(x), n).has_value() && nth_root_exact(den(x), n).has_value();
}

}  // namespace

IsomorphismClass is_isomorphic(const WeierstrassCurve<FFElement>& c1,
                               const WeierstrassCurve<FFElement>& c2) {
  if (j_invariant(c1) != j_invariant(c2)) return IsomorphismClass::JMismatch;
  if (c1.a4.is_zero()) {
    // j = 0: isomorphic iff a6'/a6 is a sixth power.
    return is_nth_power(c2.a6 / c1.a6, 6) ? IsomorphismClass::Isomorphic
                                          : IsomorphismClass::TwistClassMismatch;
  }
  if (c1.a6.is_zero()) {
    // j = 1728: isomorphic iff a4'/a4 is a fourth power.
    return is_nth_power(c2.a4 / c1.a4, 4) ? IsomorphismClass::Isomorphic
                                          : IsomorphismClass::TwistClassMismatch;
  }
  // Generic j: the twist class d = u^2 satisfies a4' = d^2 a4, a6' = d^3 a6.
  FFElement d = (c2.a6 * c1.a4) / (c1.a6 * c2.a4);
  if (c2.a4 != d * d * c1.a4 || c2.a6 != d * d * d * c1.a6)
    return IsomorphismClass::TwistClassMismatch;
  return quadratic_character(d) == 1 ? IsomorphismClass::Isomorphic
                                     : IsomorphismClass::TwistClassMismatch;
}

IsomorphismClass is_isomorphic(const WeierstrassCurve<Rational>& c1,
                               const WeierstrassCurve<Rational>& c2) {
  if (j_invariant(c1) != j_invariant(c2)) return IsomorphismClass::JMismatch;
  if (c1.a4 == 0) {
    return rational_is_nth_power(c2.a6 / c1.a6, 6) ? IsomorphismClass::Isomorphic
                                                   : IsomorphismClass::TwistClassMismatch;
  }
  if (c1.a6 == 0) {
    return rational_is_nth_power(c2.a4 / c1.a4, 4) ? IsomorphismClass::Isomorphic
                                                   : IsomorphismClass::TwistClassMismatch;
  }
  Rational d = (c2.a6 * c1.a4) / (c1.a6 * c2.a4);
  if (c2.a4 != d * d * c1.a4 || c2.a6 != d * d * d * c1.a6)
    return IsomorphismClass::TwistClassMismatch;
  return rational_sqrt_exact(d) ? IsomorphismClass::Isomorphic
                                : IsomorphismClass::TwistClassMismatch;
}

PlaneCubic::PlaneCubic(MultiPoly form) : form_(std::move(form)) {
  if (form_.is_zero()) throw std::invalid_argument("plane cubic: zero form");
  for (const auto& [m, c] : form_.terms()) {
    long d = m.e[static_cast<std::size_t>(static_cast<int>(Var::X))] +
             m.e[static_cast<std::size_t>(static_cast<int>(Var::Y))] +
             m.e[static_cast<std::size_t>(static_cast<int>(Var::Z))];
    if (d != 3 || m.total_degree() != 3)
      throw std::invalid_argument("plane cubic: form must be homogeneous of degree 3 in X,Y,Z");
  }
}

PlaneCubic PlaneCubic::hesse(const Rational& mu) {
  MultiPoly f = MultiPoly::variable(Var::X, 3) + MultiPoly::variable(Var::Y, 3) +
                MultiPoly::variable(Var::Z, 3) -
                Rational(3) * mu *
                    (MultiPoly::variable(Var::X) * MultiPoly::variable(Var::Y) *
                     MultiPoly::variable(Var::Z));
  return PlaneCubic(f);
}

namespace {

std::map<Var, Rational> as_point(const std::array<Rational, 3>& p) {
  return {{Var::X, p[0]}, {Var::Y, p[1]}, {Var::Z, p[2]}};
}

}  // namespace

Rational PlaneCubic::evaluate(const std::array<Rational, 3>& point) const {
  return form_.evaluate(as_point(point));
}

std::array<Rational, 3> PlaneCubic::gradient(const std::array<Rational, 3>& point) const {
  auto pt = as_point(point);
  return {form_.derivative(Var::X).evaluate(pt), form_.derivative(Var::Y).evaluate(pt),
          form_.derivative(Var::Z).evaluate(pt)};
}

Rational PlaneCubic::hessian_determinant(const std::array<Rational, 3>& point) const {
  auto pt = as_point(point);
  const Var vars[3] = {Var::X, Var::Y, Var::Z};
  Rational h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = form_.derivative(vars[i]).derivative(vars[j]).evaluate(pt);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
         h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

WeierstrassCurve<Rational> nagell_reduce(const PlaneCubic& cubic,
                                         const std::array<Rational, 3>& flex) {
  if (flex[0] == 0 && flex[1] == 0 && flex[2] == 0)
    throw std::invalid_argument("nagell_reduce: zero point");
  if (cubic.evaluate(flex) != 0)
    throw std::invalid_argument("nagell_reduce: point does not lie on the cubic");
  auto grad = cubic.gradient(flex);
  if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
    throw std::domain_error("nagell_reduce: cubic is singular at the given point");
  if (cubic.hessian_determinant(flex) != 0)
    throw std::invalid_argument("nagell_reduce: point is not an inflection point");

  // New coordinates (X', Y', Z') = T (X, Y, Z): the flex goes to (0:1:0) and
  // its tangent to {Z' = 0}. Both the gradient row and flex x gradient are
  // orthogonal to the flex, so T below is always invertible.
  Rational T[3][3];
  T[2][0] = grad[0];
  T[2][1] = grad[1];
  T[2][2] = grad[2];
  T[0][0] = flex[1] * grad[2] - flex[2] * grad[1];
  T[0][1] = flex[2] * grad[0] - flex[0] * grad[2];
  T[0][2] = flex[0] * grad[1] - flex[1] * grad[0];
  int pivot = flex[0] != 0 ? 0 : (flex[1] != 0 ? 1 : 2);
  T[1][0] = T[1][1] = T[1][2] = 0;
  T[1][pivot] = Rational(1) / flex[pivot];

  Rational det = T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1]) -
                 T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0]) +
                 T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]);
  if (det == 0) throw std::logic_error("nagell_reduce: coordinate change degenerated");

  Rational inv[3][3];
  inv[0][0] = (T[1][1] * T[2][2] - T[1][2] * T[2][1]) / det;
  inv[0][1] = (T[0][2] * T[2][1] - T[0][1] * T[2][2]) / det;
  inv[0][2] = (T[0][1] * T[1][2] - T[0][2] * T[1][1]) / det;
  inv[1][0] = (T[1][2] * T[2][0] - T[1][0] * T[2][2]) / det;
  inv[1][1] = (T[0][0] * T[2][2] - T[0][2] * T[2][0]) / det;
  inv[1][2] = (T[0][2] * T[1][0] - T[0][0] * T[1][2]) / det;
  inv[2][0] = (T[1][0] * T[2][1] - T[1][1] * T[2][0]) / det;
  inv[2][1] = (T[0][1] * T[2][0] - T[0][0] * T[2][1]) / det;
  inv[2][2] = (T[0][0] * T[1][1] - T[0][1] * T[1][0]) / det;

  // C'(X',Y',Z') = C(T^{-1} (X',Y',Z')).
  const Var vars[3] = {Var::X, Var::Y, Var::Z};
  MultiPoly lin[3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) lin[i] += inv[i][j] * MultiPoly::variable(vars[j]);
  }
  MultiPoly transformed;
  for (const auto& [m, c] : cubic.form().terms()) {
    MultiPoly term = MultiPoly::constant(c);
    for (int i = 0; i < 3; ++i) {
      auto e = m.e[static_cast<std::size_t>(static_cast<int>(vars[i]))];
      if (e > 0) term *= lin[i].pow(e);
    }
    transformed += term;
  }

  auto coeff = [&](unsigned ex, unsigned ey, unsigned ez) {
    Monomial m;
    m.e[static_cast<std::size_t>(static_cast<int>(Var::X))] = static_cast<std::uint16_t>(ex);
    m.e[static_cast<std::size_t>(static_cast<int>(Var::Y))] = static_cast<std::uint16_t>(ey);
    m.e[static_cast<std::size_t>(static_cast<int>(Var::Z))] = static_cast<std::uint16_t>(ez);
    auto it = transformed.terms().find(m);
    return it == transformed.terms().end() ? Rational(0) : it->second;
  };

  Rational alpha = coeff(3, 0, 0), beta = coeff(2, 0, 1), gamma = coeff(1, 0, 2),
           delta = coeff(0, 0, 3);
  Rational zeta = coeff(1, 1, 1), eta_c = coeff(0, 1, 2), iota = coeff(0, 2, 1);
  if (coeff(0, 3, 0) != 0 || coeff(2, 1, 0) != 0 || coeff(1, 2, 0) != 0)
    throw std::logic_error("nagell_reduce: flex normalization failed");
  if (iota == 0) throw std::domain_error("nagell_reduce: cubic is singular at the given point");
  if (alpha == 0) throw std::domain_error("nagell_reduce: singular cubic (tangent is a component)");

  // iota y^2 + (zeta x + eta) y = -(alpha x^3 + beta x^2 + gamma x + delta),
  // then x -> x/c, y -> y/c with c = -alpha/iota to reach a long Weierstrass form.
  Rational a1 = zeta / iota, a3 = eta_c / iota;
  Rational cc = -alpha / iota, d2 = -beta / iota, e1 = -gamma / iota, f0 = -delta / iota;
  WeierstrassCurve<Rational> w =
      short_model_from_long<Rational>(a1, d2, a3 * cc, e1 * cc, f0 * cc * cc);
  if (discriminant(w) == 0) throw std::domain_error("nagell_reduce: singular cubic");
  return w;
}

}  // namespace emsurf
