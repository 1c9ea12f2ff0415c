#pragma once

#include <cstdint>
#include <string>

#include "emsurf/polynomial.hpp"

namespace emsurf {

// Outcome of one exact identity check. On failure the residual polynomial
// (the cleared-denominator difference) is returned, never a bare boolean.
struct IdentityResult {
  bool pass = false;
  MultiPoly residual;
  std::string witness;
  std::string detail;
};

// j(E_lambda) - 1728 = [8(lambda+1)(lambda-2)(2lambda-1) / lambda(lambda-1)]^2.
IdentityResult verify_legendre_eta();

// The Weierstrass model of the Hessian cubic has j = xi(mu)^3 with
// xi = 3 mu (mu^3 + 8)/(mu^3 - 1).
IdentityResult verify_hessian_xi();

// Reduce the Hessian cubic at its rational flex (1 : -1 : 0) for `samples`
// rational parameter values and compare j with the displayed model. The two
// sides are rational functions of degree <= 36, so agreement at more than 73
// points proves the identity.
IdentityResult verify_hesse_weierstrass_link(int samples = 100);

// For E: y^2 = x^3 - 27 xi x - 54 eta over the field of B:
// Delta = 6^12, j = xi^3, c4 = 6^4 xi.
IdentityResult verify_surface_equation();

// Substituting t = eta into the K3 model and reducing by eta^2 = xi^3 - 1728
// gives a4 = -27 xi^9, a6 = -54 eta xi^12; the scaling u = xi^2 recovers E.
IdentityResult verify_base_change();

// The projection (xi, eta) -> eta has degree 3: xi generates a cubic extension
// of Q(eta) (x^3 - (eta^2 + 1728) has no rational-function root by degree
// parity), and over F_p with p = 2 mod 3 each sampled eta0 has exactly one
// preimage.
IdentityResult verify_projection_degree(std::int64_t p = 11, int samples = 20);

}  // namespace emsurf
