#include "emsurf/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace emsurf {

namespace detail {

namespace {
constexpr std::int64_t kMaxFieldSize = std::int64_t(1) << 40;
constexpr std::int64_t kMaxTableSize = std::int64_t(1) << 24;
}  // namespace

FqData::Coords FqData::add(const Coords& a, const Coords& b) const {
  Coords c{0, 0, 0};
  for (int i = 0; i < r; ++i) {
    c[i] = a[i] + b[i];
    if (c[i] >= p) c[i] -= p;
  }
  return c;
}

FqData::Coords FqData::sub(const Coords& a, const Coords& b) const {
  Coords c{0, 0, 0};
  for (int i = 0; i < r; ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) c[i] += p;
  }
  return c;
}

FqData::Coords FqData::neg(const Coords& a) const {
  Coords c{0, 0, 0};
  for (int i = 0; i < r; ++i) c[i] = a[i] == 0 ? 0 : p - a[i];
  return c;
}

FqData::Coords FqData::smul(std::int64_t s, const Coords& a) const {
  s %= p;
  if (s < 0) s += p;
  Coords c{0, 0, 0};
  for (int i = 0; i < r; ++i) c[i] = (a[i] * s) % p;
  return c;
}

FqData::Coords FqData::mul(const Coords& a, const Coords& b) const {
  if (r == 1) return Coords{(a[0] * b[0]) % p, 0, 0};
  // Schoolbook product, degree <= 2r-2, then reduce x^r -> -(m[r-1]x^{r-1}+...+m[0]).
  std::array<std::int64_t, 5> t{0, 0, 0, 0, 0};
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
  }
  for (int d = 2 * r - 2; d >= r; --d) {
    std::int64_t c = t[d];
    if (c == 0) continue;
    t[d] = 0;
    for (int i = 0; i < r; ++i) {
      t[d - r + i] = (t[d - r + i] + (p - minpoly[i] % p) % p * c) % p;
    }
  }
  return Coords{t[0], r > 1 ? t[1] : 0, r > 2 ? t[2] : 0};
}

bool FqData::is_zero(const Coords& a) const {
  for (int i = 0; i < r; ++i)
    if (a[i] != 0) return false;
  return true;
}

FqData::Coords FqData::pow(Coords a, std::int64_t e) const {
  Coords result{1 % p, 0, 0};
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FqData::Coords FqData::inv(const Coords& a) const {
  if (is_zero(a)) throw std::domain_error("finite field: division by zero");
  return pow(a, q - 2);
}

std::int64_t FqData::index_of(const Coords& a) const {
  std::int64_t idx = 0;
  for (int i = r - 1; i >= 0; --i) idx = idx * p + a[i];
  return idx;
}

FqData::Coords FqData::coords_of(std::int64_t index) const {
  Coords c{0, 0, 0};
  for (int i = 0; i < r; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

void FqData::ensure_tables() const {
  std::call_once(table_once, [this] {
    if (q > kMaxTableSize)
      throw std::length_error("finite field: character table would exceed memory budget");
    chi_table.assign(static_cast<std::size_t>(q), -1);
    sqrt_table.assign(static_cast<std::size_t>(q), -1);
    chi_table[0] = 0;
    sqrt_table[0] = 0;
    for (std::int64_t i = 1; i < q; ++i) {
      Coords z = coords_of(i);
      std::int64_t s = index_of(mul(z, z));
      chi_table[static_cast<std::size_t>(s)] = 1;
      if (sqrt_table[static_cast<std::size_t>(s)] < 0)
        sqrt_table[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(i);
    }
  });
}

int FqData::character_via_pow(const Coords& a) const {
  if (is_zero(a)) return 0;
  Coords e = pow(a, (q - 1) / 2);
  if (e[0] == 1 && (r < 2 || e[1] == 0) && (r < 3 || e[2] == 0)) return 1;
  return -1;
}

}  // namespace detail

namespace {

// No roots in F_p suffices for irreducibility in degree 2 and 3.
bool is_irreducible_by_roots(const detail::FqData& base, const std::vector<std::int64_t>& m) {
  const std::int64_t p = base.p;
  const int deg = static_cast<int>(m.size());
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 1;  // x^deg accumulated via Horner on monic poly
    for (int i = deg - 1; i >= 0; --i) v = (v * x + m[static_cast<std::size_t>(i)]) % p;
    if (v == 0) return false;
  }
  return true;
}

std::shared_ptr<const detail::FqData> make_data(std::int64_t p, int r,
                                                const std::vector<std::int64_t>& coeffs) {
  auto d = std::make_shared<detail::FqData>();
  d->p = p;
  d->r = r;
  std::int64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > detail::kMaxFieldSize) throw std::invalid_argument("finite field: p^r too large");
  }
  d->q = q;
  for (int i = 0; i < r; ++i) d->minpoly[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)];
  return d;
}

void require_valid_characteristic(std::int64_t p) {
  if (p <= 3) throw std::invalid_argument("finite field: characteristic must be > 3");
  if (p >= (std::int64_t(1) << 31))
    throw std::invalid_argument("finite field: characteristic too large");
  if (!is_prime(p)) throw std::invalid_argument("finite field: " + std::to_string(p) + " is not prime");
}

}  // namespace

FiniteField build_extension(std::int64_t p, int r) {
  require_valid_characteristic(p);
  if (r < 1 || r > 3) throw std::invalid_argument("finite field: extension degree must be 1..3");
  if (r == 1) return FiniteField(make_data(p, 1, {0}));

  detail::FqData base;
  base.p = p;
  base.r = 1;
  base.q = p;
  // Scan monic candidates x^r + m[r-1]x^{r-1} + ... + m[0] in increasing
  // value of sum m[i] p^i; the first irreducible one is the canonical choice.
  std::int64_t span = 1;
  for (int i = 0; i < r; ++i) span *= p;
  std::vector<std::int64_t> m(static_cast<std::size_t>(r), 0);
  for (std::int64_t n = 0; n < span; ++n) {
    std::int64_t v = n;
    for (int i = 0; i < r; ++i) {
      m[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    if (is_irreducible_by_roots(base, m)) return FiniteField(make_data(p, r, m));
  }
  throw std::logic_error("finite field: no irreducible polynomial found");
}

FiniteField field_with_modulus(std::int64_t p, const std::vector<std::int64_t>& coeffs) {
  require_valid_characteristic(p);
  const int r = static_cast<int>(coeffs.size());
  if (r < 2 || r > 3) throw std::invalid_argument("finite field: modulus degree must be 2 or 3");
  std::vector<std::int64_t> m(coeffs);
  for (auto& c : m) {
    c %= p;
    if (c < 0) c += p;
  }
  detail::FqData base;
  base.p = p;
  base.r = 1;
  base.q = p;
  if (!is_irreducible_by_roots(base, m))
    throw std::invalid_argument("finite field: supplied modulus is reducible");
  return FiniteField(make_data(p, r, m));
}

std::vector<std::int64_t> FiniteField::modulus_coefficients() const {
  std::vector<std::int64_t> out;
  for (int i = 0; i < data_->r; ++i) out.push_back(data_->minpoly[static_cast<std::size_t>(i)]);
  return out;
}

FFElement FiniteField::zero() const { return FFElement(*this, {0, 0, 0}); }

FFElement FiniteField::one() const { return FFElement(*this, {1, 0, 0}); }

FFElement FiniteField::from_integer(const Integer& n) const {
  Integer m = n % data_->p;
  if (m < 0) m += data_->p;
  return FFElement(*this, {static_cast<std::int64_t>(m), 0, 0});
}

FFElement FiniteField::generator() const {
  if (data_->r < 2) throw std::invalid_argument("finite field: prime field has no generator coordinate");
  return FFElement(*this, {0, 1, 0});
}

FFElement FiniteField::element(const std::vector<std::int64_t>& coords) const {
  if (static_cast<int>(coords.size()) > data_->r)
    throw std::invalid_argument("finite field: too many coordinates");
  detail::FqData::Coords c{0, 0, 0};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t v = coords[i] % data_->p;
    if (v < 0) v += data_->p;
    c[i] = v;
  }
  return FFElement(*this, c);
}

FFElement FiniteField::element_by_index(std::int64_t index) const {
  if (index < 0 || index >= data_->q) throw std::out_of_range("finite field: element index");
  return FFElement(*this, data_->coords_of(index));
}

bool FiniteField::same_field(const FiniteField& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->r == other.data_->r &&
         data_->minpoly == other.data_->minpoly;
}

void FFElement::require_same_field(const FFElement& a, const FFElement& b) {
  if (!a.field_.data() || !b.field_.data())
    throw std::invalid_argument("finite field: uninitialized element");
  if (!a.field_.same_field(b.field_))
    throw std::invalid_argument("finite field: mixed moduli");
}

bool FFElement::is_zero() const { return field_.data()->is_zero(c_); }

std::int64_t FFElement::index() const { return field_.data()->index_of(c_); }

std::vector<std::int64_t> FFElement::coords() const {
  std::vector<std::int64_t> out;
  for (int i = 0; i < field_.data()->r; ++i) out.push_back(c_[static_cast<std::size_t>(i)]);
  return out;
}

std::int64_t FFElement::residue() const {
  if (field_.data()->r != 1) throw std::invalid_argument("finite field: residue() needs a prime field");
  return c_[0];
}

FFElement FFElement::operator-() const { return FFElement(field_, field_.data()->neg(c_)); }

FFElement FFElement::inverse() const { return FFElement(field_, field_.data()->inv(c_)); }

FFElement FFElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return FFElement(field_, field_.data()->pow(c_, e));
}

FFElement operator+(const FFElement& a, const FFElement& b) {
  FFElement::require_same_field(a, b);
  return FFElement(a.field_, a.field_.data()->add(a.c_, b.c_));
}

FFElement operator-(const FFElement& a, const FFElement& b) {
  FFElement::require_same_field(a, b);
  return FFElement(a.field_, a.field_.data()->sub(a.c_, b.c_));
}

FFElement operator*(const FFElement& a, const FFElement& b) {
  FFElement::require_same_field(a, b);
  return FFElement(a.field_, a.field_.data()->mul(a.c_, b.c_));
}

FFElement operator/(const FFElement& a, const FFElement& b) {
  FFElement::require_same_field(a, b);
  return FFElement(a.field_, a.field_.data()->mul(a.c_, b.field_.data()->inv(b.c_)));
}

bool operator==(const FFElement& a, const FFElement& b) {
  FFElement::require_same_field(a, b);
  return a.c_ == b.c_;
}

int quadratic_character(const FFElement& a) {
  const auto& d = *a.field().data();
  if (d.q <= detail::kMaxTableSize) {
    d.ensure_tables();
    return d.chi_table[static_cast<std::size_t>(d.index_of(a.c_))];
  }
  return d.character_via_pow(a.c_);
}

}  // namespace emsurf
