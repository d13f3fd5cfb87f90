#include "llcent/entropy_alg.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "dense_strip.hpp"
#include "llcent/parallel.hpp"

namespace llcent {

namespace {

using strip::DenseStrip;
using strip::step_vector;

// Incremental rank of trajectory generators projected below k. Stage j
// absorbs g^j(e_(t,m)) for the generators m in [k, k + j*band) of U'_k whose
// image can reach below k; after stage j the rank equals dim T_{j+1}/U'.
class TrajectoryEngine {
public:
  TrajectoryEngine(const BandedEndo& g, int k, int max_stage)
      : g_(g),
        k_(k),
        max_stage_(std::max(max_stage, 1)),
        acc_(g.space().field, g.space().tracks * max_stage_ * g.band()) {}

  int advance() {
    ++stage_;
    if (stage_ > max_stage_) throw std::logic_error("stage exceeds window");
    const int b = g_.band();
    const int t = g_.space().tracks;

    for (auto& img : images_) img = step_vector(g_, img);
    for (int m = k_ + (stage_ - 1) * b; m <= k_ - 1 + stage_ * b; ++m) {
      if (m < k_) continue;
      for (int tr = 1; tr <= t; ++tr) {
        DenseStrip img(t, m, m);
        img.add(tr, m, 1, g_.space().field);
        for (int step = 0; step < stage_; ++step) img = step_vector(g_, img);
        images_.push_back(std::move(img));
      }
    }
    // projections below the level: positions [k - max_stage*band, k - 1]
    const int span = max_stage_ * b;
    std::vector<Scalar> row(static_cast<std::size_t>(t) * span);
    for (const auto& img : images_) {
      for (int tr = 1; tr <= t; ++tr)
        for (int j = 0; j < span; ++j)
          row[(tr - 1) * span + j] = img.at(tr, k_ - span + j);
      acc_.absorb(row);
    }
    return acc_.rank();
  }

private:
  const BandedEndo& g_;
  int k_;
  int max_stage_;
  int stage_ = 0;
  detail::RankAccumulator acc_;
  std::vector<DenseStrip> images_; // g^stage of the reachable generators
};

// window cost scales with the deepest stage reached, not with the cap
class GrowingTrajectoryEngine {
public:
  GrowingTrajectoryEngine(const BandedEndo& g, int k, int cap)
      : g_(g), k_(k), cap_(cap), max_stage_(std::min(cap, 8)) {
    eng_ = std::make_unique<TrajectoryEngine>(g_, k_, max_stage_);
  }

  int advance() {
    if (done_ + 1 > max_stage_) {
      max_stage_ = std::min(cap_, max_stage_ * 2);
      eng_ = std::make_unique<TrajectoryEngine>(g_, k_, max_stage_);
      for (int j = 0; j < done_; ++j) eng_->advance();
    }
    ++done_;
    return eng_->advance();
  }

private:
  const BandedEndo& g_;
  int k_, cap_, max_stage_, done_ = 0;
  std::unique_ptr<TrajectoryEngine> eng_;
};

} // namespace

int trajectory_dim(const BandedEndo& g, int k, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  TrajectoryEngine eng(g, k, n - 1);
  int r = 0;
  for (int j = 1; j < n; ++j) r = eng.advance();
  return r;
}

TrajectoryTable trajectory_sequence(const BandedEndo& g, int k, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  TrajectoryTable table;
  table.level = k;
  table.dims.push_back(0); // unused slot so dims[n] is dim T_n/U'
  table.dims.push_back(0); // T_1 = U'
  TrajectoryEngine eng(g, k, n_max - 1);
  for (int j = 1; j < n_max; ++j) table.dims.push_back(eng.advance());
  return table;
}

namespace {

StabilizationCertificate run_increments(const BandedEndo& g, int k,
                                        const StabilizationPolicy& policy,
                                        std::optional<int> bound) {
  if (policy.n_cap < 1 || policy.s_min < 1)
    throw std::invalid_argument("bad stabilization policy");
  const int cap = bound ? std::max(policy.n_cap, 4 * policy.s_min +
                                                     policy.n_cap)
                        : policy.n_cap;
  GrowingTrajectoryEngine eng(g, k, cap);

  StabilizationCertificate cert;
  int prev_rank = 0;
  std::optional<int> prev_inc;
  int run = 0, stab_at = 1;

  for (int j = 1; j <= cap; ++j) {
    int r = eng.advance();
    int inc = r - prev_rank;
    prev_rank = r;
    if (prev_inc && inc > *prev_inc)
      throw std::logic_error("trajectory increments increased");
    if (prev_inc && inc == *prev_inc) {
      ++run;
    } else {
      run = 1;
      stab_at = j;
    }
    prev_inc = inc;
    if (inc == 0 || (run >= policy.s_min && (!bound || inc <= *bound))) {
      cert.certified = true;
      cert.value = inc;
      cert.stabilized_at = stab_at;
      cert.agreement = run;
      cert.n_used = j;
      return cert;
    }
  }
  cert.certified = false;
  cert.value = prev_inc.value_or(0);
  cert.stabilized_at = stab_at;
  cert.agreement = run;
  cert.n_used = cap;
  return cert;
}

} // namespace

StabilizationCertificate h_alg(const BandedEndo& g, int k,
                               const StabilizationPolicy& policy) {
  return run_increments(g, k, policy, std::nullopt);
}

EntropyReport ent_alg(const BandedEndo& g, const KSweepPolicy& sweep) {
  // H(g, U'_k) grows as U' shrinks, i.e. as k decreases; sweep descending.
  const int k_hi = sweep.k_max.value_or(g.core_hi() + g.band() +
                                        g.period_right());
  int k_lo = sweep.k_min.value_or(g.core_lo() - g.band() - g.period_left() -
                                  sweep.plateau);
  if (k_lo > k_hi) k_lo = k_hi;

  EntropyReport report;
  const int n_levels = k_hi - k_lo + 1;
  report.per_level.resize(n_levels);
  parallel_for(n_levels, [&](int i) {
    int k = k_hi - i; // descending
    report.per_level[i] = LevelResult{k, h_alg(g, k, sweep.stab)};
  });

  detail::repair_monotone_sweep(report.per_level, [&](int level, int bound) {
    return run_increments(g, level, sweep.stab, bound);
  });

  std::optional<int> last_certified;
  for (const auto& lv : report.per_level) {
    if (!lv.cert.certified) continue;
    if (last_certified && lv.cert.value < *last_certified)
      throw std::logic_error("H not monotone in the sweep");
    last_certified = lv.cert.value;
  }

  int max_value = 0, max_certified = 0;
  bool any_certified = false;
  for (const auto& lv : report.per_level) {
    max_value = std::max(max_value, lv.cert.value);
    if (lv.cert.certified) {
      any_certified = true;
      max_certified = std::max(max_certified, lv.cert.value);
    }
  }

  const int plateau_needed =
      std::max({sweep.plateau, g.period_left(), g.period_right()});
  int trailing = 0;
  for (int i = n_levels - 1; i >= 0; --i) {
    const auto& cert = report.per_level[i].cert;
    if (!cert.certified || cert.value != report.per_level.back().cert.value)
      break;
    ++trailing;
  }
  bool top_certified =
      report.per_level.back().cert.certified && trailing >= plateau_needed;

  if (any_certified) {
    report.value = max_certified;
    report.certified = top_certified && max_value == max_certified;
  } else {
    report.value = max_value;
    report.certified = false;
  }

  if (n_levels >= 3) {
    int span = std::min(sweep.plateau, n_levels - 1);
    bool growing = span >= 2;
    for (int i = n_levels - span; growing && i < n_levels; ++i)
      if (report.per_level[i].cert.value <=
          report.per_level[i - 1].cert.value)
        growing = false;
    report.possibly_infinite = growing;
    if (growing) report.certified = false;
  }

  report.h_top =
      report.value * std::log(static_cast<double>(g.space().field.p));
  return report;
}

BridgeReport bridge_check(const BandedEndo& f, int k, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  BridgeReport report;
  report.level = k;
  report.n_max = n_max;

  const BandedEndo g = dualize(f);
  const int kp = perp_level(k);
  // both tables in one pass each: codims[n-1] = dim U/C_n
  CotrajectoryTable lhs = gamma_sequence(f, k, std::max(2, n_max - 1));
  TrajectoryTable rhs = trajectory_sequence(g, kp, n_max);
  for (int n = 1; n <= n_max; ++n) {
    int c = lhs.codims[n - 1];
    int t = rhs.dims[n];
    if (c != t) report.mismatches.push_back({n, c, t});
  }
  return report;
}

} // namespace llcent
