#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emsurf/eta.hpp"
#include "emsurf/finite_field.hpp"
#include "emsurf/kodaira.hpp"

namespace emsurf {

struct SurfaceFiber {
  Place place;
  FiberData fiber;
};

// An elliptic surface given by its Weierstrass model over the base, together
// with the classified singular fibers. Construction re-derives the fiber list
// from the kodaira layer and checks it is complete (Euler sum = 12 chi and no
// stray zero of the discriminant).
struct SurfaceModel {
  std::string name;
  long long chi = 0;
  std::vector<SurfaceFiber> singular_fibers;

  // Fiber multiset over the algebraic closure: each place contributes
  // deg(place) copies of its fiber type.
  std::vector<KodairaType> geometric_fiber_types() const;
  long long euler_number() const;  // sum of deg(place) * e_v
};

SurfaceModel surface_S();  // y^2 = x^3 - 27 xi x - 54 eta over B
SurfaceModel surface_X();  // y^2 = x^3 - 27(t^2+1728)^3 x - 54 t (t^2+1728)^4 over P^1

struct SurfaceCount {
  std::int64_t q = 0;
  std::int64_t total = 0;
  std::int64_t smooth_fiber_sum = 0;        // fibers over B(F_q) - {o_B}
  std::int64_t singular_contribution = 0;   // the I6* fiber, 11q + 1
};

// #S(F_q) by summing fiber counts over the base: the fiber over every affine
// point of B is smooth (the discriminant is the unit 6^12), and the fiber at
// o_B contributes 11q + 1. The base loop is split into deterministic chunks
// when threads > 1; totals are reduced in chunk order.
SurfaceCount count_surface_S(const FiniteField& Fq, int threads = 1);

PointCount count_base_B(const FiniteField& Fq);

struct TraceReport {
  std::int64_t q = 0;
  std::int64_t a_q = 0;  // H^1 trace
  std::int64_t b_q = 0;  // transcendental H^2 trace
  bool hasse_ok = false;  // |b_q| <= 2q
  SurfaceCount count;
};

// Extract b_q from a direct surface count via
// #S(F_q) = 1 + 12q + b_q + q^2 - (1+q) a_q. Throws if |b_q| > 2q.
TraceReport lefschetz_b(const FiniteField& Fq, int threads = 1);

struct DichotomyReport {
  std::int64_t p = 0;
  bool split = false;  // p = 1 mod 4
  Integer b_p;
  Integer b_p_predicted;     // pi^2 + conj^2 or 0
  Integer b_p2;              // only computed in the inert case
  Integer b_p2_expected;     // 2 p^2
  bool eigenvalue_input_ok = false;
  long long predicted_rho = 0;
  long long predicted_rank_fp = 0;    // over F_p (geometric rank over F_q, r odd/even)
  long long predicted_rank_fp2 = 0;   // over F_{p^2}
  std::string assumption;             // "tate-k3" when the rank conclusion is conditional
};

// p = 1 mod 4: verifies b_p = pi^2 + conj^2, not 0 or +-2p, predicting
// rho = 12 and rank 0. p = 3 mod 4: verifies b_p = 0 and b_{p^2} = 2p^2 by an
// F_{p^2} surface count, predicting rho = 14 and ranks 1 / 2; that conclusion
// is conditional on the Tate conjecture for elliptic K3 surfaces.
DichotomyReport dichotomy_check(std::int64_t p, int threads = 1);

// The conditional Neron-Severi determinant -p^2 for supersingular reduction;
// valid under the Artin-Tate conjecture. Requires p = 3 mod 4, p > 3.
Integer artin_tate_det(std::int64_t p);

}  // namespace emsurf
