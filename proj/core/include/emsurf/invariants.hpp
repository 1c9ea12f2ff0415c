#pragma once

#include <array>
#include <string>
#include <vector>

namespace emsurf {

// Numerical invariants of an elliptic surface over a genus-1 base:
// e = 12 chi, b2 = 12 chi + 2, h11 = 10 chi + 2, pg = chi, q = 1.
struct SurfaceInvariants {
  long long chi = 0;
  long long euler = 0;
  long long b2 = 0;
  long long h11 = 0;
  long long pg = 0;
  long long irregularity = 1;

  // Hodge diamond rows: {1}, {q,q}, {pg,h11,pg}, {q,q}, {1}.
  std::array<std::vector<long long>, 5> hodge_diamond() const;
  // Alternating sum of the diamond (the Euler number).
  long long diamond_alternating_sum() const;
  std::string diamond_string() const;
};

SurfaceInvariants invariants_for(long long chi);

// rho = r + 2 + sum_v (m_v - 1).
long long picard_number(long long mw_rank, long long sum_mv_minus_one);

struct BaseChangeSpec {
  long long n = 1;                          // pullback along multiplication by n
  std::vector<long long> component_counts;  // m_v over the singular fibers of the source
  long long chi = 1;
  bool positive_characteristic = false;  // Picard bound: h11 in char 0, b2 in char p
  long long source_rank = 0;
};

enum class PullbackVerdict { RankZero, Inconclusive };

const char* to_string(PullbackVerdict v);

struct PullbackReport {
  SurfaceInvariants invariants;  // of the pulled-back surface
  long long rho_lower = 0;       // 2 + n^2 sum (m_v - 1)
  long long rho_upper = 0;       // h11 or b2 of the pullback
  PullbackVerdict verdict = PullbackVerdict::Inconclusive;
};

// Multiplication by n on the base is unramified of degree n^2, so the Euler
// number scales by n^2 and every singular fiber acquires n^2 copies. When the
// source is extremal the Picard bound pinches and the pullback has rank 0;
// otherwise the argument is inconclusive.
PullbackReport pullback_invariants(const BaseChangeSpec& spec);

}  // namespace emsurf
