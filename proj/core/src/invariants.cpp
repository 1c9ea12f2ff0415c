#include "emsurf/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace emsurf {

std::array<std::vector<long long>, 5> SurfaceInvariants::hodge_diamond() const {
  return {std::vector<long long>{1},
          {irregularity, irregularity},
          {pg, h11, pg},
          {irregularity, irregularity},
          {1}};
}

long long SurfaceInvariants::diamond_alternating_sum() const {
  auto d = hodge_diamond();
  long long sum = 0;
  for (int row = 0; row < 5; ++row) {
    long long sign = row % 2 == 0 ? 1 : -1;
    for (auto v : d[static_cast<std::size_t>(row)]) sum += sign * v;
  }
  return sum;
}

std::string SurfaceInvariants::diamond_string() const {
  std::ostringstream os;
  auto d = hodge_diamond();
  for (int row = 0; row < 5; ++row) {
    bool first = true;
    for (auto v : d[static_cast<std::size_t>(row)]) {
      if (!first) os << ",";
      os << v;
      first = false;
    }
    if (row < 4) os << "; ";
  }
  return os.str();
}

SurfaceInvariants invariants_for(long long chi) {
  if (chi <= 0) throw std::invalid_argument("invariants_for: chi >= 1 required");
  SurfaceInvariants s;
  s.chi = chi;
  s.euler = 12 * chi;
  s.b2 = 12 * chi + 2;
  s.h11 = 10 * chi + 2;
  s.pg = chi;  // chi = 1 - q + pg with q = 1 for a genus-1 base
  s.irregularity = 1;
  return s;
}

long long picard_number(long long mw_rank, long long sum_mv_minus_one) {
  if (mw_rank < 0 || sum_mv_minus_one < 0) throw std::invalid_argument("picard_number: bad input");
  return mw_rank + 2 + sum_mv_minus_one;
}

const char* to_string(PullbackVerdict v) {
  switch (v) {
    case PullbackVerdict::RankZero:
      return "rank 0";
    case PullbackVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

PullbackReport pullback_invariants(const BaseChangeSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("pullback_invariants: n >= 1 required");
  long long sum = 0;
  for (auto m : spec.component_counts) {
    if (m < 1) throw std::invalid_argument("pullback_invariants: component counts are >= 1");
    sum += m - 1;
  }

  PullbackReport r;
  long long n2 = spec.n * spec.n;
  r.invariants = invariants_for(spec.chi * n2);  // e scales by n^2, so does chi
  r.rho_lower = 2 + n2 * sum;
  r.rho_upper = spec.positive_characteristic ? r.invariants.b2 : r.invariants.h11;

  long long source_rho = picard_number(spec.source_rank, sum);
  long long source_bound = spec.positive_characteristic ? (12 * spec.chi + 2) : (10 * spec.chi + 2);
  bool source_extremal = spec.source_rank == 0 && source_rho == source_bound;

  if (source_extremal && r.rho_lower == r.rho_upper)
    r.verdict = PullbackVerdict::RankZero;
  else
    r.verdict = PullbackVerdict::Inconclusive;
  return r;
}

}  // namespace emsurf
