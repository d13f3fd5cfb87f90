// Independent brute-force verification of the rank-based engine.
//
// Dimension counts are recomputed from the definitions by exhaustive
// enumeration over F_p vectors supported on a finite window. Enumeration is
// capped at 65536 states; callers shrink windows rather than raising the cap.
// Solution counts must come out as exact powers of p (linearity witness).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llcent/endo.hpp"

namespace llcent {

inline constexpr std::uint64_t kOracleCap = 65536;

// dim U_k / C_n(f, U_k) by definition: enumerate all vectors supported on the
// window positions [k, k+window_len), count those whose first n-1 images stay
// in U_k, and return window dimension minus log_p of the count. Exact when
// window_len > (n-1) * band.
int enum_cotraj_codim(const BandedEndo& f, int k, int n, int window_len);

// dim T_n(g, U'_k)/U' by definition: enumerate all combinations of the
// below-k projections of g^j-images of the U' generators within reach and
// count the distinct values.
int enum_trajectory_dim(const BandedEndo& g, int k, int n);

struct OracleReport {
  int checked = 0;
  int skipped = 0; // (k, n) pairs over the enumeration cap
  struct Mismatch {
    std::string side; // "cotrajectory" or "trajectory"
    int level;
    int n;
    int engine;
    int oracle;
  };
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Engine vs oracle on every (k, n) pair within the enumeration cap, on both
// the cotrajectory side of f and the trajectory side of its dual.
OracleReport cross_validate(const BandedEndo& f, const std::vector<int>& levels,
                            int n_max);

} // namespace llcent
