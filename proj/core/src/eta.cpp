#include "emsurf/eta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace emsurf {

QSeries::QSeries(long long order) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

const Integer& QSeries::coeff(long long n) const {
  if (n < 0 || n > order()) throw std::out_of_range("QSeries: coefficient index");
  return c_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(long long n, const Integer& v) {
  if (n < 0 || n > order()) throw std::out_of_range("QSeries: coefficient index");
  c_[static_cast<std::size_t>(n)] = v;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  QSeries h(std::min(f.order(), g.order()));
  for (long long i = 0; i <= h.order(); ++i)
    h.c_[static_cast<std::size_t>(i)] = f.coeff(i) + g.coeff(i);
  return h;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  QSeries h(std::min(f.order(), g.order()));
  for (long long i = 0; i <= h.order(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (long long j = 0; i + j <= h.order(); ++j) {
      if (g.coeff(j) == 0) continue;
      h.c_[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
    }
  }
  return h;
}

void QSeries::multiply_one_minus_qm_pow(long long m, long long k) {
  if (m <= 0 || k < 0) throw std::invalid_argument("QSeries: bad factor parameters");
  for (long long rep = 0; rep < k; ++rep) {
    for (long long i = order(); i >= m; --i) {
      c_[static_cast<std::size_t>(i)] -= c_[static_cast<std::size_t>(i - m)];
    }
  }
}

QSeries QSeries::shifted(long long s) const {
  if (s < 0) throw std::invalid_argument("QSeries: negative shift");
  QSeries h(order());
  for (long long i = 0; i + s <= order(); ++i) h.c_[static_cast<std::size_t>(i + s)] = coeff(i);
  return h;
}

QSeries eta_power(long long scale, long long power, long long order) {
  if (scale <= 0 || power <= 0) throw std::invalid_argument("eta_power: positive parameters expected");
  if ((scale * power) % 24 != 0)
    throw std::invalid_argument("eta_power: 24 must divide scale*power (non-integral leading exponent)");
  long long lead = scale * power / 24;
  QSeries f(order);
  if (order >= 0) f.set_coeff(0, 1);
  for (long long m = 1; scale * m <= order; ++m) {
    f.multiply_one_minus_qm_pow(scale * m, power);
  }
  return f.shifted(lead);
}

std::string GaussianInteger::to_string() const {
  std::ostringstream os;
  os << re.str();
  if (im >= 0)
    os << "+" << im.str() << "i";
  else
    os << im.str() << "i";
  return os.str();
}

GaussianInteger gaussian_prime_above(std::int64_t p) {
  if (p % 4 != 1 || !is_prime(p))
    throw std::invalid_argument("gaussian_prime_above: split prime p = 1 mod 4 required");
  for (std::int64_t a = 1; a * a <= p; ++a) {
    std::int64_t b2 = p - a * a;
    std::int64_t b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(b2)));
    while (b * b < b2) ++b;
    if (b * b != b2) continue;
    // Scan the eight associates/conjugates for the one congruent to
    // 1 mod 2(1+i): (x-1+yi)/(2+2i) integral iff 8 | 2(x-1)+2y and 8 | 2y-2(x-1).
    const std::int64_t cands[8][2] = {{a, b}, {a, -b}, {-a, b}, {-a, -b},
                                      {b, a}, {b, -a}, {-b, a}, {-b, -a}};
    for (const auto& xy : cands) {
      std::int64_t x = xy[0], y = xy[1];
      if (((2 * (x - 1) + 2 * y) % 8 == 0) && ((2 * y - 2 * (x - 1)) % 8 == 0)) {
        return GaussianInteger{Integer(x), Integer(y)};
      }
    }
    throw std::logic_error("gaussian_prime_above: no normalized associate found");
  }
  throw std::logic_error("gaussian_prime_above: no two-square decomposition found");
}

Integer cm_weight3_bp(std::int64_t p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("cm_weight3_bp: prime p > 3 required");
  if (p % 4 == 3) return 0;
  GaussianInteger pi = gaussian_prime_above(p);
  GaussianInteger t = pi * pi + pi.conj() * pi.conj();
  return t.re;  // imaginary parts cancel
}

Integer EulerFactor::power_sum(int r) const {
  if (r < 0) throw std::invalid_argument("EulerFactor: negative power");
  // t_0 = 2, t_1 = trace, t_r = trace*t_{r-1} - character*p^{w-1}*t_{r-2}.
  Integer norm = character * pow_integer(Integer(p), static_cast<unsigned long>(weight - 1));
  Integer t_prev = 2, t_cur = trace;
  if (r == 0) return t_prev;
  for (int i = 2; i <= r; ++i) {
    Integer t_next = trace * t_cur - norm * t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return t_cur;
}

bool EulerFactor::trace_bound_ok() const {
  // |trace|^2 <= 4 p^(w-1)
  return trace * trace <= 4 * pow_integer(Integer(p), static_cast<unsigned long>(weight - 1));
}

std::string EulerFactor::to_string() const {
  std::ostringstream os;
  os << "1 - (" << trace.str() << ")T";
  Integer norm = character * pow_integer(Integer(p), static_cast<unsigned long>(weight - 1));
  os << " + (" << norm.str() << ")T^2";
  return os.str();
}

EulerFactor euler_factor(std::int64_t p, CuspForm form) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("euler_factor: good primes p > 3 only");
  EulerFactor f;
  f.p = p;
  switch (form) {
    case CuspForm::Weight2Base: {
      f.weight = 2;
      f.character = 1;
      f.trace = eta_power(6, 4, p).coeff(p);
      break;
    }
    case CuspForm::Weight3Transcendental: {
      f.weight = 3;
      f.character = p % 4 == 1 ? 1 : -1;
      f.trace = cm_weight3_bp(p);
      break;
    }
  }
  if (!f.trace_bound_ok()) throw std::logic_error("euler_factor: trace bound violated");
  return f;
}

Integer LocalZeta::predicted_surface_count(int r) const {
  Integer q = pow_integer(Integer(p), static_cast<unsigned long>(r));
  Integer a = weight2.power_sum(r);
  Integer b = weight3.power_sum(r);
  return 1 + 12 * q + b + q * q - (1 + q) * a;
}

std::string LocalZeta::describe() const {
  std::ostringstream os;
  os << "Z(T) = W2(T) W2(" << p << "T) / [(1-T)(1-" << p << "T)^12 W3(T) (1-" << p * p
     << "T)] with W2 = " << weight2.to_string() << ", W3 = " << weight3.to_string();
  return os.str();
}

LocalZeta zeta_local(std::int64_t p) {
  LocalZeta z;
  z.p = p;
  z.weight2 = euler_factor(p, CuspForm::Weight2Base);
  z.weight3 = euler_factor(p, CuspForm::Weight3Transcendental);
  return z;
}

}  // namespace emsurf
