#include "emsurf/surface.hpp"

#include <stdexcept>
#include <thread>

namespace emsurf {

std::vector<KodairaType> SurfaceModel::geometric_fiber_types() const {
  std::vector<KodairaType> out;
  for (const auto& sf : singular_fibers) {
    for (long i = 0; i < sf.place.degree(); ++i) out.push_back(sf.fiber.type);
  }
  return out;
}

long long SurfaceModel::euler_number() const {
  long long e = 0;
  for (const auto& sf : singular_fibers) e += sf.place.degree() * sf.fiber.euler;
  return e;
}

SurfaceModel surface_S() {
  auto E = curve_E_over_B();
  // Constant discriminant: no singular fiber away from o_B.
  BFieldElement delta = discriminant(E);
  if (!delta.is_constant() || delta.constant_value() != Rational(pow_integer(6, 12)))
    throw std::logic_error("surface_S: discriminant is not the constant 6^12");

  SurfaceModel s;
  s.name = "S";
  auto local = minimal_model_at(E, Place::o_B());
  s.singular_fibers.push_back({Place::o_B(), classify_fiber(local)});
  s.chi = s.euler_number() / 12;
  if (s.chi * 12 != s.euler_number()) throw std::logic_error("surface_S: Euler number not 12*chi");
  return s;
}

SurfaceModel surface_X() {
  auto X = curve_X_over_P1();
  MultiPoly tsq = MultiPoly::variable(Var::T, 2) + MultiPoly::constant(Rational(kTwelveCubed));
  Place root_place = Place::finite(tsq);

  // Completeness of the bad-fiber list: Delta is a constant times
  // (t^2 + 1728)^8, so infinity and that quadratic place are the only
  // candidates.
  RationalFunction delta = discriminant(X);
  if (!delta.den().is_constant()) throw std::logic_error("surface_X: non-polynomial discriminant");
  auto q = divide_exact(delta.num(), tsq.pow(8));
  if (!q || !q->is_constant()) throw std::logic_error("surface_X: discriminant shape unexpected");

  SurfaceModel s;
  s.name = "X";
  auto at_infinity = minimal_model_at(X, Place::infinity());
  s.singular_fibers.push_back({Place::infinity(), classify_fiber(at_infinity)});
  auto at_roots = minimal_model_at(X, root_place);
  s.singular_fibers.push_back({root_place, classify_fiber(at_roots)});
  s.chi = s.euler_number() / 12;
  if (s.chi * 12 != s.euler_number()) throw std::logic_error("surface_X: Euler number not 12*chi");
  return s;
}

namespace {

struct RawField {
  const detail::FqData* d;
  detail::FqData::Coords c1728, m27, m54;

  explicit RawField(const FiniteField& Fq) : d(Fq.data().get()) {
    d->ensure_tables();
    c1728 = from_int(1728);
    m27 = from_int(-27);
    m54 = from_int(-54);
  }
  detail::FqData::Coords from_int(std::int64_t v) const {
    std::int64_t r = v % d->p;
    if (r < 0) r += d->p;
    return {r, 0, 0};
  }
  int chi(const detail::FqData::Coords& a) const {
    return d->chi_table[static_cast<std::size_t>(d->index_of(a))];
  }
};

// Character sum over one smooth fiber y^2 = x^3 + a4 x + a6.
std::int64_t fiber_count(const RawField& F, const detail::FqData::Coords& a4,
                         const detail::FqData::Coords& a6) {
  const auto* d = F.d;
  std::int64_t sum = d->q + 1;
  for (std::int64_t i = 0; i < d->q; ++i) {
    auto x = d->coords_of(i);
    auto fx = d->add(d->add(d->mul(d->mul(x, x), x), d->mul(a4, x)), a6);
    sum += F.chi(fx);
  }
  return sum;
}

// Sum of fiber counts over the affine base points with xi-index in [lo, hi).
std::int64_t smooth_range_sum(const RawField& F, std::int64_t lo, std::int64_t hi) {
  const auto* d = F.d;
  std::int64_t total = 0;
  for (std::int64_t i = lo; i < hi; ++i) {
    auto xi = d->coords_of(i);
    auto rhs = d->sub(d->mul(d->mul(xi, xi), xi), F.c1728);
    int c = F.chi(rhs);
    if (c == -1) continue;
    auto a4 = d->mul(F.m27, xi);
    if (c == 0) {
      total += fiber_count(F, a4, F.from_int(0));
    } else {
      auto eta = d->coords_of(d->sqrt_table[static_cast<std::size_t>(d->index_of(rhs))]);
      total += fiber_count(F, a4, d->mul(F.m54, eta));
      total += fiber_count(F, a4, d->mul(F.m54, d->neg(eta)));
    }
  }
  return total;
}

}  // namespace

PointCount count_base_B(const FiniteField& Fq) { return count_points(curve_B_over(Fq)); }

SurfaceCount count_surface_S(const FiniteField& Fq, int threads) {
  RawField F(Fq);
  const std::int64_t q = Fq.size();

  SurfaceCount sc;
  sc.q = q;
  if (threads <= 1 || q < 512) {
    sc.smooth_fiber_sum = smooth_range_sum(F, 0, q);
  } else {
    // Fixed chunking, reduced in chunk order: the result does not depend on
    // scheduling.
    int nchunks = threads * 8;
    std::vector<std::int64_t> partial(static_cast<std::size_t>(nchunks), 0);
    std::vector<std::thread> pool;
    std::int64_t chunk = (q + nchunks - 1) / nchunks;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int c = t; c < nchunks; c += threads) {
          std::int64_t lo = c * chunk;
          std::int64_t hi = std::min<std::int64_t>(q, lo + chunk);
          if (lo < hi) partial[static_cast<std::size_t>(c)] = smooth_range_sum(F, lo, hi);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto v : partial) sc.smooth_fiber_sum += v;
  }
  sc.singular_contribution = 11 * q + 1;
  sc.total = sc.smooth_fiber_sum + sc.singular_contribution;
  return sc;
}

TraceReport lefschetz_b(const FiniteField& Fq, int threads) {
  TraceReport r;
  r.q = Fq.size();
  r.count = count_surface_S(Fq, threads);
  r.a_q = count_base_B(Fq).trace;
  // #S = 1 + 12q + b + q^2 - (1+q) a  =>  b = N - 1 - 12q - q^2 + (1+q) a.
  r.b_q = r.count.total - 1 - 12 * r.q - r.q * r.q + (1 + r.q) * r.a_q;
  r.hasse_ok = r.b_q <= 2 * r.q && r.b_q >= -2 * r.q;
  if (!r.hasse_ok)
    throw std::logic_error("lefschetz_b: |b_q| > 2q; counting data is corrupt");
  return r;
}

DichotomyReport dichotomy_check(std::int64_t p, int threads) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("dichotomy_check: prime p > 3 required");
  DichotomyReport r;
  r.p = p;
  r.split = (p % 4 == 1);

  FiniteField Fp = build_extension(p, 1);
  r.b_p = lefschetz_b(Fp, threads).b_q;
  r.b_p_predicted = cm_weight3_bp(p);

  if (r.split) {
    // Eigenvalues pi^2, conj^2 are not p times a root of unity as soon as the
    // trace avoids {0, 2p, -2p}.
    r.eigenvalue_input_ok =
        r.b_p == r.b_p_predicted && r.b_p != 0 && r.b_p != 2 * Integer(p) && r.b_p != -2 * Integer(p);
    r.predicted_rho = 12;
    r.predicted_rank_fp = 0;
    r.predicted_rank_fp2 = 0;
    r.assumption.clear();  // unconditional: transcendence of the eigenvalues
  } else {
    FiniteField Fp2 = build_extension(p, 2);
    r.b_p2 = lefschetz_b(Fp2, threads).b_q;
    r.b_p2_expected = 2 * Integer(p) * p;
    r.eigenvalue_input_ok = r.b_p == 0 && r.b_p_predicted == 0 && r.b_p2 == r.b_p2_expected;
    r.predicted_rho = 14;
    r.predicted_rank_fp = 1;
    r.predicted_rank_fp2 = 2;
    r.assumption = "tate-k3";
  }
  return r;
}

Integer artin_tate_det(std::int64_t p) {
  if (p <= 3 || p % 4 != 3 || !is_prime(p))
    throw std::invalid_argument("artin_tate_det: p = 3 mod 4, p > 3 required");
  return -Integer(p) * p;
}

}  // namespace emsurf
