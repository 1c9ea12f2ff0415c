#include "emsurf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace emsurf {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"lambda", "mu", "xi", "eta", "t", "x", "y", "z"};
  return names[static_cast<int>(v)];
}

long Monomial::total_degree() const {
  long d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[static_cast<std::size_t>(i)] > other.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i)
    m.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)] + other.e[static_cast<std::size_t>(i)]);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) {
    if (other.e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)])
      throw std::domain_error("monomial: non-divisible quotient");
    m.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)] - other.e[static_cast<std::size_t>(i)]);
  }
  return m;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly f;
  if (c != 0) f.terms_.emplace(Monomial{}, c);
  return f;
}

MultiPoly MultiPoly::variable(Var v, unsigned exp) {
  MultiPoly f;
  if (exp > 0xffff) throw std::invalid_argument("polynomial: exponent too large");
  Monomial m;
  m.e[static_cast<std::size_t>(static_cast<int>(v))] = static_cast<std::uint16_t>(exp);
  f.terms_.emplace(m, Rational(1));
  return f;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("polynomial: not a constant");
  return terms_.begin()->second;
}

long MultiPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<long>(d, m.e[static_cast<std::size_t>(static_cast<int>(v))]);
  return d;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i) {
    for (const auto& [m, c] : terms_) {
      if (m.e[static_cast<std::size_t>(i)] > 0) {
        out.push_back(static_cast<Var>(i));
        break;
      }
    }
  }
  return out;
}

bool MultiPoly::is_univariate_in(Var v) const {
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (static_cast<Var>(i) != v && m.e[static_cast<std::size_t>(i)] > 0) return false;
    }
  }
  return true;
}

void MultiPoly::set_term(const Monomial& m, const Rational& c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly f;
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  for (const auto& [m, c] : g.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) { return *this += -g; }

MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly h = f;
  h += g;
  return h;
}

MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly h = f;
  h -= g;
  return h;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly h;
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      Monomial m = mf * mg;
      auto it = h.terms_.find(m);
      if (it == h.terms_.end()) {
        h.terms_.emplace(m, cf * cg);
      } else {
        it->second += cf * cg;
        if (it->second == 0) h.terms_.erase(it);
      }
    }
  }
  return h;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& g) {
  *this = *this * g;
  return *this;
}

MultiPoly operator*(const Rational& c, const MultiPoly& f) {
  MultiPoly h;
  if (c == 0) return h;
  for (const auto& [m, cf] : f.terms_) h.terms_.emplace(m, c * cf);
  return h;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(1);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const auto vi = static_cast<std::size_t>(static_cast<int>(v));
  MultiPoly f;
  for (const auto& [m, c] : terms_) {
    if (m.e[vi] == 0) continue;
    Monomial d = m;
    d.e[vi] = static_cast<std::uint16_t>(d.e[vi] - 1);
    f.terms_[d] = c * Rational(m.e[vi]);
  }
  return f;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  const auto vi = static_cast<std::size_t>(static_cast<int>(v));
  // Group by exponent of v and evaluate with Horner.
  long maxdeg = degree(v);
  if (maxdeg <= 0) return *this;
  std::vector<MultiPoly> by_exp(static_cast<std::size_t>(maxdeg) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    auto k = rest.e[vi];
    rest.e[vi] = 0;
    by_exp[k].set_term(rest, by_exp[k].terms().count(rest) ? by_exp[k].terms().at(rest) + c : c);
  }
  MultiPoly acc = by_exp[static_cast<std::size_t>(maxdeg)];
  for (long k = maxdeg - 1; k >= 0; --k) {
    acc = acc * value + by_exp[static_cast<std::size_t>(k)];
  }
  return acc;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i) {
      auto e = m.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument(std::string("polynomial: unbound variable ") +
                                    var_name(static_cast<Var>(i)));
      term *= pow_rational(it->second, e);
    }
    total += term;
  }
  return total;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("polynomial: zero has no leading term");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& [m, c] : terms_) {
    g = gcd_integer(g, num(c));
    l = l / gcd_integer(l, den(c)) * den(c);
  }
  Rational content = Rational(g) / Rational(l);
  if (leading_term().second < 0) content = -content;
  return content;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  MultiPoly f;
  for (const auto& [m, coef] : terms_) f.terms_.emplace(m, coef / c);
  return f;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned k) const {
  const auto vi = static_cast<std::size_t>(static_cast<int>(v));
  MultiPoly f;
  for (const auto& [m, c] : terms_) {
    if (m.e[vi] != k) continue;
    Monomial rest = m;
    rest.e[vi] = 0;
    f.terms_.emplace(rest, c);
  }
  return f;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rational a = boost::multiprecision::abs(c);
    bool printed_coeff = false;
    if (a != 1 || m == Monomial{}) {
      os << a.str();
      printed_coeff = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      auto e = m.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (printed_coeff) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e > 1) os << "^" << e;
      printed_coeff = true;
    }
  }
  return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial: division by zero");
  MultiPoly q;
  MultiPoly r = f;
  auto [gm, gc] = g.leading_term();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading_term();
    if (!gm.divides(rm)) return std::nullopt;
    MultiPoly t;
    t.set_term(rm / gm, rc / gc);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

// Dense univariate view: coefficients low..high.
std::vector<Rational> dense_coeffs(const MultiPoly& f, Var v) {
  long d = f.degree(v);
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(d, 0)) + 1, Rational(0));
  for (const auto& [m, coef] : f.terms()) {
    c[m.e[static_cast<std::size_t>(static_cast<int>(v))]] += coef;
  }
  return c;
}

MultiPoly from_dense(const std::vector<Rational>& c, Var v) {
  MultiPoly f;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) f += c[i] * MultiPoly::variable(v, static_cast<unsigned>(i));
  }
  return f;
}

std::vector<Rational> dense_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Integer> divisors_of(Integer n) {
  n = boost::multiprecision::abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& f, const MultiPoly& g, Var v) {
  if (!f.is_univariate_in(v) || !g.is_univariate_in(v))
    throw std::invalid_argument("gcd_univariate: inputs not univariate in the given variable");
  if (f.is_zero()) return g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  std::vector<Rational> a = dense_coeffs(f, v);
  std::vector<Rational> b = dense_coeffs(g, v);
  while (!b.empty()) {
    auto r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return from_dense(a, v).primitive_part();
}

bool is_irreducible_over_Q(const MultiPoly& f, Var v) {
  if (!f.is_univariate_in(v)) throw std::invalid_argument("irreducibility: not univariate");
  long deg = f.degree(v);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  if (deg > 4) throw std::invalid_argument("irreducibility: degree > 4 unsupported");

  // Work with the primitive integer model.
  MultiPoly p = f.primitive_part();
  std::vector<Rational> c = dense_coeffs(p, v);
  std::vector<Integer> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (den(c[i]) != 1) throw std::logic_error("irreducibility: primitive part not integral");
    a[i] = num(c[i]);
  }
  if (a[0] == 0) return false;  // divisible by v

  // Rational root test (complete for degree 2 and 3).
  for (const Integer& r : divisors_of(a[0])) {
    for (const Integer& s : divisors_of(a.back())) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational x = Rational(sign ? -r : r) / Rational(s);
        Rational val = 0;
        for (std::size_t i = c.size(); i-- > 0;) val = val * x + c[i];
        if (val == 0) return false;
      }
    }
  }
  if (deg <= 3) return true;

  // Degree 4: exclude integer quadratic factorizations
  // (a4 x^4 + ... = (s x^2 + b x + u)(t x^2 + e x + w), st = a4, uw = a0).
  for (const Integer& s : divisors_of(a[4])) {
    for (int ssign = 0; ssign < 2; ++ssign) {
      Integer S = ssign ? -s : s;
      if (a[4] % S != 0) continue;
      Integer T = a[4] / S;
      for (const Integer& u : divisors_of(a[0])) {
        for (int usign = 0; usign < 2; ++usign) {
          Integer U = usign ? -u : u;
          if (a[0] % U != 0) continue;
          Integer W = a[0] / U;
          // Unknowns (b, e):  bT + Se = a3,  bW + Ue = a1,  be + SW + UT = a2.
          Integer det = T * U - S * W;
          if (det != 0) {
            Integer bn = a[3] * U - S * a[1];
            Integer en = T * a[1] - a[3] * W;
            if (bn % det != 0 || en % det != 0) continue;
            Integer b = bn / det, e = en / det;
            if (b * e + S * W + U * T == a[2]) return false;
          } else {
            // Degenerate system: small search is enough at these sizes.
            for (Integer b = -64; b <= 64; ++b) {
              if (S == 0) continue;
              Integer rem = a[3] - b * T;
              if (rem % S != 0) continue;
              Integer e = rem / S;
              if (b * W + U * e == a[1] && b * e + S * W + U * T == a[2]) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

RationalFunction::RationalFunction(const Rational& c)
    : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable(Var v) {
  return RationalFunction(MultiPoly::variable(v));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  // Pull contents so both parts are primitive with integer coefficients.
  Rational cn = num_.content();
  Rational cd = den_.content();
  num_ = (cn / cd) * num_.primitive_part();
  den_ = den_.primitive_part();

  if (den_.is_constant()) {
    num_ = (Rational(1) / den_.constant_value()) * num_;
    den_ = MultiPoly::constant(1);
    return;
  }

  auto nv = num_.variables();
  auto dv = den_.variables();
  if (nv.size() <= 1 && dv.size() == 1 && (nv.empty() || nv[0] == dv[0])) {
    Var v = dv[0];
    MultiPoly g = gcd_univariate(num_, den_, v);
    if (g.degree(v) > 0) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    if (den_.is_constant()) {
      num_ = (Rational(1) / den_.constant_value()) * num_;
      den_ = MultiPoly::constant(1);
      return;
    }
    // Monic denominator convention for the univariate case.
    Rational lead = den_.leading_term().second;
    num_ = (Rational(1) / lead) * num_;
    den_ = (Rational(1) / lead) * den_;
    return;
  }

  if (auto q = divide_exact(num_, den_)) {
    num_ = *q;
    den_ = MultiPoly::constant(1);
  }
}

bool RationalFunction::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

long RationalFunction::degree_in(Var v) const {
  if (num_.is_zero()) throw std::domain_error("rational function: degree of zero");
  return num_.degree(v) - den_.degree(v);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f;
  f.num_ = -num_;
  f.den_ = den_;
  return f;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("rational function: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw std::domain_error("rational function: division by zero");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  return (f.num_ * g.den_ - g.num_ * f.den_).is_zero();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(Rational(1));
  RationalFunction b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

Rational RationalFunction::evaluate(const std::map<Var, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("rational function: pole at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == MultiPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace emsurf
