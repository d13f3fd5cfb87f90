// Algebraic entropy via trajectories, and the duality bridge.
//
// On the dual side the n-th trajectory of a basic open U' = U'_k is
//   T_n(g, U') = U' + g(U') + ... + g^(n-1)(U'),
// and H(g, U') is the eventually constant increment of dim T_n/U'. The
// annihilator of U_k is the basic open of level 2-k in the dual coordinates,
// so dualization never needs numeric annihilator solving, and the exact
// per-n identity  dim U/C_n(f,U) = dim T_n(dual f, perp(U))/perp(U)  links
// both entropies: ent*(f) = ent(dual f).

#pragma once

#include "llcent/entropy_top.hpp"

namespace llcent {

// Level of the annihilator of U_k in the dual space: (U_k)^perp = U'_{2-k}.
constexpr int perp_level(int k) { return 2 - k; }

struct TrajectoryTable {
  int level = 0;
  std::vector<int> dims; // dims[n] = dim T_n(g, U')/U' for n >= 1; dims[0] = 0
};

// dim T_n(g, U'_k)/U', exact: the rank of the projections below k of the
// g^j-images of the U' coordinate generators within reach of the band.
int trajectory_dim(const BandedEndo& g, int k, int n);

TrajectoryTable trajectory_sequence(const BandedEndo& g, int k, int n_max);

// H(g, U'_k) as the stationary increment of dims, with certificate.
StabilizationCertificate h_alg(const BandedEndo& g, int k,
                               const StabilizationPolicy& policy = {});

// ent(g) by a descending k-sweep (H is anti-monotone in k on the dual side).
EntropyReport ent_alg(const BandedEndo& g, const KSweepPolicy& sweep = {});

struct BridgeReport {
  int level = 0;
  int n_max = 0;
  struct Mismatch {
    int n;
    int cotraj_codim;
    int trajectory_dim;
  };
  std::vector<Mismatch> mismatches; // empty means the identity held exactly
  bool ok() const { return mismatches.empty(); }
};

// Per-n check of dim U/C_n(f, U_k) = dim T_n(dual f, U'_{2-k})/U'.
BridgeReport bridge_check(const BandedEndo& f, int k, int n_max);

} // namespace llcent
