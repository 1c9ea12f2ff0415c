#include "emsurf/kodaira.hpp"

#include <stdexcept>

namespace emsurf {

std::string KodairaType::to_string() const {
  switch (tag) {
    case Tag::In:
      return "I" + std::to_string(n);
    case Tag::InStar:
      return "I" + std::to_string(n) + "*";
    case Tag::II:
      return "II";
    case Tag::III:
      return "III";
    case Tag::IV:
      return "IV";
    case Tag::IVStar:
      return "IV*";
    case Tag::IIIStar:
      return "III*";
    case Tag::IIStar:
      return "II*";
  }
  return "?";
}

FiberRootLattice root_lattice_of(const KodairaType& type) {
  FiberRootLattice out;
  using Tag = KodairaType::Tag;
  switch (type.tag) {
    case Tag::In: {
      if (type.n <= 1) return out;  // I0, I1: irreducible fiber
      int m = type.n - 1;
      out.gram = root_gram(RootName::A, m);
      // Every component of a multiplicative fiber is simple.
      for (int i = 0; i < m; ++i) out.simple_positions.push_back(static_cast<std::size_t>(i));
      return out;
    }
    case Tag::InStar: {
      int m = type.n + 4;
      out.gram = root_gram(RootName::D, m);
      // Chain end 0 is the near simple component, the two fork tips are far.
      out.simple_positions = {0, static_cast<std::size_t>(m - 2), static_cast<std::size_t>(m - 1)};
      return out;
    }
    case Tag::II:
      return out;
    case Tag::III:
      out.gram = root_gram(RootName::A, 1);
      out.simple_positions = {0};
      return out;
    case Tag::IV:
      out.gram = root_gram(RootName::A, 2);
      out.simple_positions = {0, 1};
      return out;
    case Tag::IVStar:
      out.gram = root_gram(RootName::E, 6);
      // Ends of the two long arms; the identity component extends the short arm.
      out.simple_positions = {0, 4};
      return out;
    case Tag::IIIStar:
      out.gram = root_gram(RootName::E, 7);
      out.simple_positions = {5};
      return out;
    case Tag::IIStar:
      out.gram = root_gram(RootName::E, 8);
      return out;
  }
  throw std::logic_error("root_lattice_of: unknown tag");
}

FiberData fiber_data(const KodairaType& type) {
  FiberData f;
  f.type = type;
  using Tag = KodairaType::Tag;
  switch (type.tag) {
    case Tag::In:
      if (type.n < 0) throw std::invalid_argument("fiber_data: negative I_n index");
      f.euler = type.n;
      f.component_count = type.n == 0 ? 1 : type.n;
      break;
    case Tag::InStar:
      if (type.n < 0) throw std::invalid_argument("fiber_data: negative I_n* index");
      f.euler = type.n + 6;
      f.component_count = type.n + 5;
      break;
    case Tag::II:
      f.euler = 2;
      f.component_count = 1;
      break;
    case Tag::III:
      f.euler = 3;
      f.component_count = 2;
      break;
    case Tag::IV:
      f.euler = 4;
      f.component_count = 3;
      break;
    case Tag::IVStar:
      f.euler = 8;
      f.component_count = 7;
      break;
    case Tag::IIIStar:
      f.euler = 9;
      f.component_count = 8;
      break;
    case Tag::IIStar:
      f.euler = 10;
      f.component_count = 9;
      break;
  }

  auto rl = root_lattice_of(type);
  f.contr.push_back(Rational(0));  // identity component
  if (rl.gram) {
    Rational det = rl.gram->determinant();
    f.component_group_order = num(det);  // root Gram determinants are positive integers
    auto inv = rl.gram->inverse();
    for (auto pos : rl.simple_positions) f.contr.push_back(inv[pos][pos]);
  }
  return f;
}

KodairaType classify_valuations(const Valuation& v_c4, const Valuation& v_c6, long long v_delta) {
  auto at_least = [](const Valuation& v, long long bound) { return !v || *v >= bound; };
  if (v_delta < 0) throw std::logic_error("classify_valuations: negative v(Delta)");
  if (v_delta == 0) return KodairaType::I(0);
  if (v_c4 && *v_c4 == 0) {
    // Multiplicative reduction.
    return KodairaType::I(static_cast<int>(v_delta));
  }
  // Additive: j has a pole iff 3 v(c4) < v(Delta).
  if (v_c4 && 3 * *v_c4 < v_delta) {
    if (*v_c4 != 2 || !v_c6 || *v_c6 != 3)
      throw std::logic_error("classify_valuations: inconsistent I_n* triple");
    long long n = v_delta - 6;
    if (n < 1) throw std::logic_error("classify_valuations: I_n* with n < 1");
    return KodairaType::I_star(static_cast<int>(n));
  }
  switch (v_delta) {
    case 2:
      return KodairaType{KodairaType::Tag::II, 0};
    case 3:
      if (!v_c4 || *v_c4 != 1) throw std::logic_error("classify_valuations: III needs v(c4)=1");
      return KodairaType{KodairaType::Tag::III, 0};
    case 4:
      if (!v_c6 || *v_c6 != 2) throw std::logic_error("classify_valuations: IV needs v(c6)=2");
      return KodairaType{KodairaType::Tag::IV, 0};
    case 6:
      if (!at_least(v_c4, 2)) throw std::logic_error("classify_valuations: I0* needs v(c4)>=2");
      return KodairaType::I_star(0);
    case 8:
      if (!at_least(v_c4, 3) || !v_c6 || *v_c6 != 4)
        throw std::logic_error("classify_valuations: IV* needs v(c4)>=3, v(c6)=4");
      return KodairaType{KodairaType::Tag::IVStar, 0};
    case 9:
      if (!v_c4 || *v_c4 != 3) throw std::logic_error("classify_valuations: III* needs v(c4)=3");
      return KodairaType{KodairaType::Tag::IIIStar, 0};
    case 10:
      if (!at_least(v_c4, 4) || !v_c6 || *v_c6 != 5)
        throw std::logic_error("classify_valuations: II* needs v(c4)>=4, v(c6)=5");
      return KodairaType{KodairaType::Tag::IIStar, 0};
    default:
      throw std::logic_error("classify_valuations: no table entry for v(Delta)=" +
                             std::to_string(v_delta));
  }
}

namespace {

long long ceil_div(long long a, long long b) {
  return a / b + ((a % b != 0 && (a > 0) == (b > 0)) ? 1 : 0);
}

// Shared minimalization logic once per coefficient type: pick the smallest k
// making u^4 a4 and u^6 a6 integral, then undo any full non-minimal steps.
template <class K, class Uniformizer, class Val>
LocalModel<K> minimalize(const WeierstrassCurve<K>& c, Uniformizer uniformizer, Val val) {
  K delta = discriminant(c);
  if (is_zero_value(delta)) throw std::domain_error("minimal_model_at: singular curve");
  Valuation v4 = val(c.a4);
  Valuation v6 = val(c.a6);
  Valuation vd = val(delta);
  if (!vd) throw std::logic_error("minimal_model_at: vanishing discriminant");

  long long k = 0;
  if (v4) k = std::max(k, ceil_div(-*v4, 4));
  if (v6) k = std::max(k, ceil_div(-*v6, 6));
  auto vc4_at = [&](long long kk) -> Valuation {
    if (!v4) return std::nullopt;
    return *v4 + 4 * kk;
  };
  auto vdelta_at = [&](long long kk) { return *vd + 12 * kk; };
  auto non_minimal = [&](long long kk) {
    Valuation vc4 = vc4_at(kk);
    bool c4_big = !vc4 || *vc4 >= 4;
    // Integrality must survive the down-scaling as well.
    bool integral = (!v4 || *v4 + 4 * (kk - 1) >= 0) && (!v6 || *v6 + 6 * (kk - 1) >= 0);
    return c4_big && vdelta_at(kk) >= 12 && integral;
  };
  while (non_minimal(k)) --k;

  LocalModel<K> m;
  K u = uniformizer();
  K u4 = u.pow(4 * k);
  K u6 = u.pow(6 * k);
  m.curve = WeierstrassCurve<K>{u4 * c.a4, u6 * c.a6};
  m.scaling_exponent = k;
  m.v_c4 = vc4_at(k);
  m.v_c6 = v6 ? Valuation(*v6 + 6 * k) : std::nullopt;
  m.v_delta = vdelta_at(k);
  if ((m.v_c4 && *m.v_c4 < 0) || (m.v_c6 && *m.v_c6 < 0))
    throw std::logic_error("minimal_model_at: integrality failed");
  return m;
}

}  // namespace

LocalModel<BFieldElement> minimal_model_at(const WeierstrassCurve<BFieldElement>& c,
                                           const Place& place) {
  if (place.kind() != Place::Kind::OB)
    throw std::invalid_argument("minimal_model_at: curves over B are minimalized at o_B");
  auto uniformizer = [] {
    // ord(xi/eta) = (-2) - (-3) = 1.
    return BFieldElement::xi() / BFieldElement::eta();
  };
  auto val = [&](const BFieldElement& f) { return valuation(f, Place::o_B()); };
  return minimalize(c, uniformizer, val);
}

LocalModel<RationalFunction> minimal_model_at(const WeierstrassCurve<RationalFunction>& c,
                                              const Place& place) {
  if (place.kind() == Place::Kind::OB)
    throw std::invalid_argument("minimal_model_at: o_B is a place of the field of B");
  auto uniformizer = [&]() -> RationalFunction {
    if (place.kind() == Place::Kind::Infinity)
      return RationalFunction(Rational(1)) / RationalFunction::variable(place.variable());
    return RationalFunction(place.poly());
  };
  auto val = [&](const RationalFunction& f) { return valuation(f, place); };
  return minimalize(c, uniformizer, val);
}

Integer fiber_point_count(const FiberData& fiber, std::int64_t q, bool all_components_rational) {
  if (!all_components_rational)
    throw std::invalid_argument(
        "fiber_point_count: only configurations with all components rational are supported");
  if (fiber.type.is_smooth())
    throw std::invalid_argument("fiber_point_count: smooth fiber counts come from the curve");
  if (fiber.type.is_multiplicative())
    throw std::invalid_argument("fiber_point_count: multiplicative fibers (cycles) unsupported");
  // Tree of m rational curves glued at m-1 rational points.
  Integer m = fiber.component_count;
  return m * (q + 1) - (m - 1);
}

}  // namespace emsurf
