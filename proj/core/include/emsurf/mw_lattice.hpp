#pragma once

#include <vector>

#include "emsurf/gram.hpp"
#include "emsurf/kodaira.hpp"

namespace emsurf {

// A hypothetical section for the height formula: arithmetic genus chi of the
// surface, intersection number (PO) with the zero section, and one component
// choice per reducible fiber (an index into FiberData::contr).
struct SectionData {
  long long chi = 1;
  long long po = 0;
  std::vector<std::size_t> component_choice;
};

// <P,P> = 2 chi + 2 (PO) - sum_v contr_v(P).
Rational height_norm(const SectionData& s, const std::vector<FiberData>& fibers);
Rational height_norm(long long chi, long long po, const Rational& contr);

struct TorsionSolution {
  long long po = 0;
  Rational contr;
};

// All solutions of 0 = 2 chi + 2 (PO) - contr with (PO) >= 0 and contr drawn
// from the fiber's correction values. An empty list proves the Mordell-Weil
// group torsion-free for a surface with this single reducible fiber.
std::vector<TorsionSolution> torsion_search(long long chi, const FiberData& fiber);

// <1> + <-1> + sum of fiber root lattices rescaled by -1.
GramLattice trivial_lattice(const std::vector<KodairaType>& fibers);

// |det M| = torsion^2 |det NS / det V|; the rank-0 case uses det M = 1.
Rational det_formula(const Rational& det_ns, const GramLattice& trivial,
                     const Integer& torsion_order);

// Determinant bookkeeping behind the supersingular-reduction scalings: the
// narrow lattice has index^2 = det ratio over the Mordell-Weil lattice, and
// the index divides the product of the component group orders.
struct NarrowLatticeCheck {
  Rational mw_det;            // det of the Mordell-Weil lattice from the det formula
  Integer narrow_det;         // claimed det of the narrow lattice (scale^2)
  Integer index;              // forced index, sqrt of the ratio
  Integer component_budget;   // product of component group orders
  bool consistent = false;    // index integral and divides the budget
};

struct SupersingularScalings {
  std::int64_t p = 0;
  std::int64_t scale_S = 0;  // L_S(p) = square lattice scaled by 2p
  std::int64_t scale_X = 0;  // L_X(p) = square lattice scaled by 6p
  NarrowLatticeCheck check_S, check_X;
};

// Requires p = 3 mod 4, p > 3 (the supersingular primes of this surface).
SupersingularScalings supersingular_reduction_scalings(std::int64_t p);

}  // namespace emsurf
