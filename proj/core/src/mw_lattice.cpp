#include "emsurf/mw_lattice.hpp"

#include <stdexcept>

namespace emsurf {

Rational height_norm(const SectionData& s, const std::vector<FiberData>& fibers) {
  if (s.component_choice.size() != fibers.size())
    throw std::invalid_argument("height_norm: one component choice per fiber expected");
  if (s.po < 0) throw std::invalid_argument("height_norm: (PO) must be non-negative");
  Rational h = Rational(2 * s.chi + 2 * s.po);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const auto& f = fibers[i];
    if (s.component_choice[i] >= f.contr.size())
      throw std::out_of_range("height_norm: component index out of range");
    h -= f.contr[s.component_choice[i]];
  }
  return h;
}

Rational height_norm(long long chi, long long po, const Rational& contr) {
  if (po < 0) throw std::invalid_argument("height_norm: (PO) must be non-negative");
  return Rational(2 * chi + 2 * po) - contr;
}

std::vector<TorsionSolution> torsion_search(long long chi, const FiberData& fiber) {
  std::vector<TorsionSolution> out;
  // 2 chi + 2 (PO) = contr bounds (PO) by the largest correction value.
  Rational max_contr = 0;
  for (const auto& c : fiber.contr) max_contr = std::max(max_contr, c);
  long long po_max = static_cast<long long>(num(max_contr) / den(max_contr)) / 2 + 1;
  for (long long po = 0; po <= po_max; ++po) {
    for (const auto& c : fiber.contr) {
      if (Rational(2 * chi + 2 * po) == c) out.push_back({po, c});
    }
  }
  return out;
}

GramLattice trivial_lattice(const std::vector<KodairaType>& fibers) {
  GramLattice v = direct_sum(GramLattice::diagonal({Rational(1)}),
                             GramLattice::diagonal({Rational(-1)}));
  for (const auto& t : fibers) {
    auto rl = root_lattice_of(t);
    if (rl.gram) v = direct_sum(v, negate(*rl.gram));
  }
  return v;
}

Rational det_formula(const Rational& det_ns, const GramLattice& trivial,
                     const Integer& torsion_order) {
  Rational det_v = trivial.determinant();
  if (det_v == 0) throw std::domain_error("det_formula: degenerate trivial lattice");
  using boost::multiprecision::abs;
  return Rational(torsion_order * torsion_order) * abs(det_ns) / abs(det_v);
}

namespace {

NarrowLatticeCheck narrow_check(const Rational& mw_det, const Integer& narrow_det,
                                const Integer& component_budget) {
  NarrowLatticeCheck c;
  c.mw_det = mw_det;
  c.narrow_det = narrow_det;
  c.component_budget = component_budget;
  Rational ratio = Rational(narrow_det) / mw_det;
  auto root = rational_sqrt_exact(ratio);
  if (root && den(*root) == 1) {
    c.index = num(*root);
    c.consistent = c.index > 0 && component_budget % c.index == 0;
  }
  return c;
}

}  // namespace

SupersingularScalings supersingular_reduction_scalings(std::int64_t p) {
  if (p <= 3 || p % 4 != 3)
    throw std::invalid_argument("supersingular_reduction_scalings: p = 3 mod 4, p > 3 required");
  if (!is_prime(p)) throw std::invalid_argument("supersingular_reduction_scalings: prime required");

  SupersingularScalings s;
  s.p = p;
  s.scale_S = 2 * p;
  s.scale_X = 6 * p;

  Rational det_ns = -Rational(p) * Rational(p);
  GramLattice v_S = trivial_lattice({KodairaType::I_star(6)});
  GramLattice v_X = trivial_lattice(
      {KodairaType::I_star(2), KodairaType{KodairaType::Tag::IVStar, 0},
       KodairaType{KodairaType::Tag::IVStar, 0}});
  Rational mw_S = det_formula(det_ns, v_S, 1);  // (p/2)^2
  Rational mw_X = det_formula(det_ns, v_X, 1);  // (p/6)^2

  Integer budget_S = fiber_data(KodairaType::I_star(6)).component_group_order;  // 4
  Integer budget_X = fiber_data(KodairaType::I_star(2)).component_group_order *
                     fiber_data(KodairaType{KodairaType::Tag::IVStar, 0}).component_group_order *
                     fiber_data(KodairaType{KodairaType::Tag::IVStar, 0}).component_group_order;

  s.check_S = narrow_check(mw_S, Integer(s.scale_S) * s.scale_S, budget_S);
  s.check_X = narrow_check(mw_X, Integer(s.scale_X) * s.scale_X, budget_X);
  if (!s.check_S.consistent || !s.check_X.consistent)
    throw std::logic_error("supersingular_reduction_scalings: determinant bookkeeping failed");
  return s;
}

}  // namespace emsurf
