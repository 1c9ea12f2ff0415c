#include "emsurf/gram.hpp"

#include <sstream>
#include <stdexcept>

namespace emsurf {

GramLattice::GramLattice(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

GramLattice GramLattice::diagonal(const std::vector<Rational>& d) {
  GramLattice g(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g.set(i, i, d[i]);
  return g;
}

GramLattice GramLattice::identity(std::size_t n) {
  return diagonal(std::vector<Rational>(n, Rational(1)));
}

const Rational& GramLattice::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("gram: index");
  return a_[i * n_ + j];
}

void GramLattice::set(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("gram: index");
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

Rational GramLattice::determinant() const {
  if (n_ == 0) return 1;  // empty lattice convention
  // Bareiss on a working copy; exact divisions stay exact over Q.
  std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = at(i, j);

  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n_ && m[pivot][k] == 0) ++pivot;
      if (pivot == n_) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
    if (prev == 0) return 0;
  }
  return sign * m[n_ - 1][n_ - 1];
}

std::vector<std::vector<Rational>> GramLattice::inverse() const {
  std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(2 * n_, Rational(0)));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = at(i, j);
    m[i][n_ + i] = 1;
  }
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    while (pivot < n_ && m[pivot][k] == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("gram: singular matrix has no inverse");
    std::swap(m[k], m[pivot]);
    Rational inv = Rational(1) / m[k][k];
    for (std::size_t j = 0; j < 2 * n_; ++j) m[k][j] *= inv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k];
      for (std::size_t j = 0; j < 2 * n_; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = m[i][n_ + j];
  return out;
}

bool GramLattice::is_positive_definite() const {
  for (std::size_t k = 1; k <= n_; ++k) {
    GramLattice minor(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.set(i, j, at(i, j));
    if (minor.determinant() <= 0) return false;
  }
  return true;
}

std::string GramLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

GramLattice root_gram(RootName name, int n) {
  auto chain = [](GramLattice& g, int len) {
    for (int i = 0; i + 1 < len; ++i) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1), -1);
  };
  switch (name) {
    case RootName::A: {
      if (n < 1) throw std::invalid_argument("root_gram: A_n needs n >= 1");
      GramLattice g(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), 2);
      chain(g, n);
      return g;
    }
    case RootName::D: {
      if (n < 3) throw std::invalid_argument("root_gram: D_n needs n >= 3");
      GramLattice g(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), 2);
      chain(g, n - 1);
      g.set(static_cast<std::size_t>(n - 3), static_cast<std::size_t>(n - 1), -1);
      return g;
    }
    case RootName::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("root_gram: E_n needs n in {6,7,8}");
      GramLattice g(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), 2);
      chain(g, n - 1);
      g.set(2, static_cast<std::size_t>(n - 1), -1);
      return g;
    }
  }
  throw std::invalid_argument("root_gram: unknown family");
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  GramLattice g(a.rank() + b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g.set(a.rank() + i, a.rank() + j, b.at(i, j));
  return g;
}

GramLattice rescale(const GramLattice& l, const Rational& c) {
  GramLattice g(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = i; j < l.rank(); ++j) g.set(i, j, c * l.at(i, j));
  return g;
}

GramLattice negate(const GramLattice& l) { return rescale(l, Rational(-1)); }

namespace {

Rational round_nearest(const Rational& x) {
  // Nearest integer, ties toward zero.
  Integer n = num(x), d = den(x);
  Integer q = n / d, r = n % d;
  if (2 * boost::multiprecision::abs(r) > d) q += (n < 0 ? -1 : 1);
  return Rational(q);
}

void require_posdef_2x2(const GramLattice& g, const char* who) {
  if (g.rank() != 2) throw std::invalid_argument(std::string(who) + ": rank-2 lattice expected");
  if (!g.is_positive_definite())
    throw std::invalid_argument(std::string(who) + ": positive definite Gram expected");
}

}  // namespace

GramLattice gauss_reduce(const GramLattice& g) {
  require_posdef_2x2(g, "gauss_reduce");
  Rational a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
  // Basis operations on (v0, v1): swap and v1 -= m v0.
  while (true) {
    if (a > c) {
      std::swap(a, c);
      // b unchanged by the swap of basis vectors
    }
    Rational m = round_nearest(b / a);
    if (m == 0) break;
    // v1 -> v1 - m v0: c' = c - 2mb + m^2 a, b' = b - m a.
    c = c - 2 * m * b + m * m * a;
    b = b - m * a;
  }
  if (a > c) std::swap(a, c);
  if (b < 0) b = -b;  // sign of the off-diagonal is a basis choice
  GramLattice out(2);
  out.set(0, 0, a);
  out.set(0, 1, b);
  out.set(1, 1, c);
  return out;
}

std::optional<Rational> is_similar_square(const GramLattice& g) {
  GramLattice r = gauss_reduce(g);
  if (r.at(0, 1) == 0 && r.at(0, 0) == r.at(1, 1)) return r.at(0, 0);
  return std::nullopt;
}

std::optional<std::array<long, 4>> find_order4_isometry(const GramLattice& g, long bound) {
  require_posdef_2x2(g, "find_order4_isometry");
  const Rational a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
  // M^2 = -1 forces trace 0 and det 1: M = [[m, n], [k, -m]] with m^2 + nk = -1.
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      for (long k = -bound; k <= bound; ++k) {
        if (m * m + n * k != -1) continue;
        // M^T G M = G with M = [[m, n], [k, -m]].
        Rational g00 = a * m * m + 2 * b * m * k + c * k * k;
        if (g00 != a) continue;
        Rational g01 = a * m * n + b * (n * k - m * m) - c * m * k;
        if (g01 != b) continue;
        Rational g11 = a * n * n - 2 * b * m * n + c * m * m;
        if (g11 != c) continue;
        return std::array<long, 4>{m, n, k, -m};
      }
    }
  }
  return std::nullopt;
}

}  // namespace emsurf
