#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emsurf/numeric.hpp"

namespace emsurf {

// The fixed variable universe of the symbolic layer.
enum class Var : int { Lambda = 0, Mu, Xi, Eta, T, X, Y, Z };
inline constexpr int kNumVars = 8;

const char* var_name(Var v);

struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  long total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divisibility
};

// Sparse exact polynomial over Q: map from exponent vector to coefficient.
// No zero coefficients are stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v, unsigned exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  long degree(Var v) const;    // -1 for the zero polynomial
  long total_degree() const;   // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Variables with a positive exponent somewhere.
  std::vector<Var> variables() const;
  bool is_univariate_in(Var v) const;  // constants count as univariate

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  MultiPoly& operator*=(const MultiPoly& g);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& f);
  friend bool operator==(const MultiPoly& f, const MultiPoly& g) = default;

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(Var v) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;

  // Leading term in lexicographic exponent order.
  std::pair<Monomial, Rational> leading_term() const;  // requires nonzero

  // gcd of integer coefficient data: coefficients divided by content() have
  // coprime integer values; sign fixed so the leading coefficient is positive.
  Rational content() const;  // 0 for the zero polynomial
  MultiPoly primitive_part() const;

  // Univariate coefficient extraction: coefficient of v^k as a polynomial.
  MultiPoly coefficient_of(Var v, unsigned k) const;

  std::string to_string() const;

  void set_term(const Monomial& m, const Rational& c);  // c = 0 erases

 private:
  std::map<Monomial, Rational> terms_;
};

// Exact division: returns f/g when g divides f, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

// Euclidean gcd for polynomials univariate in v, primitive-normalized.
MultiPoly gcd_univariate(const MultiPoly& f, const MultiPoly& g, Var v);

// Irreducibility over Q for univariate polynomials of degree <= 4.
bool is_irreducible_over_Q(const MultiPoly& f, Var v);

// Quotient field element num/den, den != 0. Reduction policy: content
// normalization always; full gcd cancellation plus a monic denominator when
// numerator and denominator are univariate in a common variable; otherwise an
// exact-division shortcut. Equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(MultiPoly::constant(1)) {}
  RationalFunction(const Rational& c);  // NOLINT: implicit constant embedding
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction variable(Var v);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  Rational constant_value() const;

  // degree(num) - degree(den) in the given variable.
  long degree_in(Var v) const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  friend bool operator==(const RationalFunction& f, const RationalFunction& g);
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) { return !(f == g); }

  RationalFunction pow(long e) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;  // den must not vanish

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

}  // namespace emsurf
