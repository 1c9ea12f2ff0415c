#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emsurf/numeric.hpp"

namespace emsurf {

// Truncated integer power series in the nome q; results of arithmetic are
// valid through the stated order.
class QSeries {
 public:
  explicit QSeries(long long order);

  long long order() const { return static_cast<long long>(c_.size()) - 1; }
  const Integer& coeff(long long n) const;
  void set_coeff(long long n, const Integer& v);

  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const QSeries& f, const QSeries& g);  // truncated convolution

  // Multiply in place by (1 - q^m)^k, truncating at the series order.
  void multiply_one_minus_qm_pow(long long m, long long k);
  // Shift by q^s (multiply by q^s), truncating.
  QSeries shifted(long long s) const;

 private:
  std::vector<Integer> c_;
};

// q-expansion of eta(scale * tau)^power = q^(scale*power/24) prod_m (1 - q^(scale*m))^power.
// Requires 24 | scale*power so the leading exponent is integral.
QSeries eta_power(long long scale, long long power, long long order);

struct GaussianInteger {
  Integer re, im;

  GaussianInteger conj() const { return {re, -im}; }
  Integer norm() const { return re * re + im * im; }
  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
  std::string to_string() const;
};

// The Gaussian prime above a split prime p = 1 mod 4, normalized to be
// congruent to 1 modulo 2(1+i). Exactly one of each conjugate pair of
// associates satisfies this; either one gives the same trace pi^2 + conj^2.
GaussianInteger gaussian_prime_above(std::int64_t p);

// Weight-3 Hecke eigenvalue at p for the CM form with CM by Q(i):
// 0 for p = 3 mod 4, pi^2 + conj(pi)^2 for p = 1 mod 4. Requires p > 3.
Integer cm_weight3_bp(std::int64_t p);

// Local factor 1 - trace*T + character*p^(weight-1)*T^2 of an L-series at a
// good prime. `character` is the nebentypus value at p (+1 or -1); the
// weight-3 CM form has character -1 exactly at the inert primes p = 3 mod 4.
struct EulerFactor {
  std::int64_t p = 0;
  int weight = 2;
  Integer trace;
  int character = 1;

  // alpha^r + beta^r for the inverse roots alpha, beta.
  Integer power_sum(int r) const;
  bool trace_bound_ok() const;  // |trace| <= 2 p^((w-1)/2)
  std::string to_string() const;
};

enum class CuspForm {
  Weight2Base,            // eta(6 tau)^4: the weight-2 form of the base curve
  Weight3Transcendental,  // eta(4 tau)^6: the weight-3 CM form
};

EulerFactor euler_factor(std::int64_t p, CuspForm form);

// Local structure of the surface zeta function at a good prime p:
// numerator pieces for H^0, the algebraic part of H^2, and H^4, the weight-3
// factor for the transcendental part, divided by the weight-2 factor at s and
// s-1 (the H^1 and H^3 contributions).
struct LocalZeta {
  std::int64_t p = 0;
  EulerFactor weight2;  // a_p piece
  EulerFactor weight3;  // b_p piece

  // 1 + 12 q + b_q + q^2 - (1+q) a_q with q = p^r, traces via power sums.
  Integer predicted_surface_count(int r) const;
  std::string describe() const;
};

LocalZeta zeta_local(std::int64_t p);

}  // namespace emsurf
