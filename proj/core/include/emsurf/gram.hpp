#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emsurf/numeric.hpp"

namespace emsurf {

// Exact symmetric Gram matrix; all arithmetic is rational, never floating point.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(std::size_t n);
  static GramLattice diagonal(const std::vector<Rational>& d);
  static GramLattice identity(std::size_t n);

  std::size_t rank() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);  // keeps symmetry

  // Determinant by Bareiss fraction-free elimination.
  Rational determinant() const;
  // Full inverse by exact Gauss-Jordan elimination; throws if singular.
  std::vector<std::vector<Rational>> inverse() const;

  bool is_positive_definite() const;  // leading principal minors > 0

  std::string to_string() const;

  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;  // row-major n x n
};

enum class RootName { A, D, E };

// Standard root lattice Gram matrices: A_n (n>=1), D_n (n>=3), E_6/E_7/E_8.
// Basis convention: a chain 0..n-2 plus one fork node, attached to node n-3
// for D and to node 2 for E.
GramLattice root_gram(RootName name, int n);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& l, const Rational& c);  // L[c]
GramLattice negate(const GramLattice& l);                      // L[-1]

// Lagrange-Gauss reduction of a positive definite binary Gram matrix.
// The reduced form satisfies 2|G01| <= G00 <= G11.
GramLattice gauss_reduce(const GramLattice& g);

// Scale c with G similar to c * identity, if any.
std::optional<Rational> is_similar_square(const GramLattice& g);

// Search for an integral 2x2 matrix M with M^T G M = G and M^2 = -1, entries
// bounded by `bound` in absolute value. Row-major result {m00, m01, m10, m11}.
std::optional<std::array<long, 4>> find_order4_isometry(const GramLattice& g, long bound = 10);

}  // namespace emsurf
