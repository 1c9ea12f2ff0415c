#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "emsurf/numeric.hpp"

namespace emsurf {

namespace detail {

// Shared descriptor of F_{p^r}, r <= 3, p > 3 prime. Elements are coordinate
// vectors on the power basis of a monic defining polynomial
//   x^r + m[r-1] x^{r-1} + ... + m[0],
// least-significant coordinate first. All coordinate arithmetic is int64;
// construction rejects p^r that would not leave headroom for products.
struct FqData {
  std::int64_t p = 0;
  int r = 1;
  std::int64_t q = 0;
  std::array<std::int64_t, 3> minpoly{0, 0, 0};

  using Coords = std::array<std::int64_t, 3>;

  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords mul(const Coords& a, const Coords& b) const;
  Coords smul(std::int64_t c, const Coords& a) const;
  Coords neg(const Coords& a) const;
  Coords pow(Coords a, std::int64_t e) const;
  Coords inv(const Coords& a) const;
  bool is_zero(const Coords& a) const;

  std::int64_t index_of(const Coords& a) const;  // sum a[i] p^i
  Coords coords_of(std::int64_t index) const;

  // Quadratic character tables, built on first use (q must fit in memory).
  // chi[i] in {-1,0,+1}; sqrt_of[i] is an index z with z^2 = i, or -1.
  mutable std::vector<std::int8_t> chi_table;
  mutable std::vector<std::int32_t> sqrt_table;
  mutable std::once_flag table_once;
  void ensure_tables() const;

  int character_via_pow(const Coords& a) const;  // a^((q-1)/2) interpreted in {-1,0,1}
};

}  // namespace detail

class FFElement;

// Value-semantics handle on a field descriptor. Descriptors are immutable and
// safely shareable across threads.
class FiniteField {
 public:
  FiniteField() = default;

  std::int64_t characteristic() const { return data_->p; }
  int degree() const { return data_->r; }
  std::int64_t size() const { return data_->q; }
  // Coefficients m[0..r-1] of the monic defining polynomial.
  std::vector<std::int64_t> modulus_coefficients() const;

  FFElement zero() const;
  FFElement one() const;
  FFElement from_integer(const Integer& n) const;
  FFElement generator() const;  // the class of x (r >= 2)
  FFElement element(const std::vector<std::int64_t>& coords) const;
  FFElement element_by_index(std::int64_t index) const;

  bool same_field(const FiniteField& other) const;

  const std::shared_ptr<const detail::FqData>& data() const { return data_; }

 private:
  friend FiniteField build_extension(std::int64_t, int);
  friend FiniteField field_with_modulus(std::int64_t, const std::vector<std::int64_t>&);
  explicit FiniteField(std::shared_ptr<const detail::FqData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FqData> data_;
};

// F_{p^r} with the deterministically chosen defining polynomial: the monic
// irreducible whose non-leading coefficient vector (m[r-1],...,m[0]) is
// lexicographically smallest, i.e. smallest value sum m[i] p^i.
// Requires p > 3 prime and 1 <= r <= 3.
FiniteField build_extension(std::int64_t p, int r = 1);

// Same field with an explicitly supplied monic defining polynomial
// (coefficients m[0..r-1]); irreducibility is verified by root enumeration.
FiniteField field_with_modulus(std::int64_t p, const std::vector<std::int64_t>& coeffs);

class FFElement {
 public:
  FFElement() = default;

  const FiniteField& field() const { return field_; }
  bool is_zero() const;
  std::int64_t index() const;  // position in the canonical enumeration
  std::vector<std::int64_t> coords() const;
  // The residue as an integer in [0, p); only for prime fields.
  std::int64_t residue() const;

  FFElement operator-() const;
  FFElement inverse() const;
  FFElement pow(std::int64_t e) const;

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b);
  friend bool operator==(const FFElement& a, const FFElement& b);
  friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }

 private:
  friend class FiniteField;
  friend int quadratic_character(const FFElement& a);
  FFElement(FiniteField f, detail::FqData::Coords c) : field_(std::move(f)), c_(c) {}
  static void require_same_field(const FFElement& a, const FFElement& b);

  FiniteField field_;
  detail::FqData::Coords c_{0, 0, 0};
};

// 0 if a = 0, +1 if a is a nonzero square, -1 otherwise.
// Computed as a^((q-1)/2); a cached table serves dense workloads.
int quadratic_character(const FFElement& a);

}  // namespace emsurf
