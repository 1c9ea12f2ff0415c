#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emsurf/bfield.hpp"
#include "emsurf/gram.hpp"
#include "emsurf/weierstrass.hpp"

namespace emsurf {

// Kodaira symbol: I_n (n >= 0), I_n* (n >= 0), II, III, IV, IV*, III*, II*.
struct KodairaType {
  enum class Tag { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };
  Tag tag = Tag::In;
  int n = 0;  // only meaningful for In / InStar

  static KodairaType I(int n) { return {Tag::In, n}; }
  static KodairaType I_star(int n) { return {Tag::InStar, n}; }

  bool is_smooth() const { return tag == Tag::In && n == 0; }
  bool is_multiplicative() const { return tag == Tag::In && n >= 1; }
  bool is_additive() const { return !is_smooth() && !is_multiplicative(); }

  std::string to_string() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

// Everything the lattice and counting layers need about one singular fiber.
// contr lists the local height corrections, one per simple component with the
// identity component (value 0) first; they are computed from the inverse Gram
// of the fiber's root lattice, not hard-coded.
struct FiberData {
  KodairaType type;
  long long euler = 0;            // e_v = v(Delta) of the minimal model
  long long component_count = 0;  // m_v
  Integer component_group_order = 1;
  std::vector<Rational> contr;
};

// Root lattice spanned by the non-identity components, plus the positions of
// the simple (multiplicity-one) components within the basis.
struct FiberRootLattice {
  std::optional<GramLattice> gram;  // nullopt when there are no non-identity components
  std::vector<std::size_t> simple_positions;
};

FiberRootLattice root_lattice_of(const KodairaType& type);
FiberData fiber_data(const KodairaType& type);

// Integral local model at a place: the curve scaled by u = uniformizer^k and
// the valuations of its invariants. Minimality: not (v(c4) >= 4 and v(Delta) >= 12).
template <class K>
struct LocalModel {
  WeierstrassCurve<K> curve;
  long long scaling_exponent = 0;  // k
  Valuation v_c4, v_c6;            // nullopt = +infinity (vanishing invariant)
  long long v_delta = 0;
};

LocalModel<BFieldElement> minimal_model_at(const WeierstrassCurve<BFieldElement>& c,
                                           const Place& place);
LocalModel<RationalFunction> minimal_model_at(const WeierstrassCurve<RationalFunction>& c,
                                              const Place& place);

// Kodaira type from the valuation triple of a minimal model (residue
// characteristic away from 2 and 3). Throws std::logic_error on a triple the
// table cannot produce.
KodairaType classify_valuations(const Valuation& v_c4, const Valuation& v_c6, long long v_delta);

template <class K>
FiberData classify_fiber(const LocalModel<K>& m) {
  return fiber_data(classify_valuations(m.v_c4, m.v_c6, m.v_delta));
}

// Points of a singular fiber (reduced) over F_q when every component and node
// is rational: the additive fibers form trees of m_v rational curves glued at
// m_v - 1 points, so the count is m_v (q+1) - (m_v - 1). Multiplicative fibers
// are cycles and are not supported here.
Integer fiber_point_count(const FiberData& fiber, std::int64_t q,
                          bool all_components_rational = true);

}  // namespace emsurf
