#include "llcent/entropy_top.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "dense_strip.hpp"
#include "llcent/parallel.hpp"

namespace llcent {

namespace {

using strip::DenseStrip;
using strip::step_functional;
using strip::step_vector;

// Incremental rank of the cotrajectory constraint functionals. Stage j
// absorbs the rows x -> (f^j x)_(t,i) for i in [k - j*band, k - 1], restricted
// to x in U_k; after stage j the rank equals dim U_k / C_{j+1}.
class CotrajEngine {
public:
  CotrajEngine(const BandedEndo& f, int k, int max_stage)
      : f_(f),
        k_(k),
        max_stage_(std::max(max_stage, 1)),
        acc_(f.space().field, f.space().tracks * max_stage_ * f.band()) {}

  int advance() {
    ++stage_;
    if (stage_ > max_stage_) throw std::logic_error("stage exceeds window");
    const int b = f_.band();
    const int t = f_.space().tracks;

    for (auto& cov : cov_) cov = step_functional(f_, cov);
    for (int i = k_ - stage_ * b; i <= k_ - 1 - (stage_ - 1) * b; ++i) {
      for (int tr = 1; tr <= t; ++tr) {
        DenseStrip unit(t, i, i);
        unit.add(tr, i, 1, f_.space().field);
        for (int step = 0; step < stage_; ++step)
          unit = step_functional(f_, unit);
        cov_.push_back(std::move(unit));
      }
    }
    // restrict each functional to the coordinates of U_k it can reach:
    // window positions [k, k - 1 + max_stage*band]
    const int width = t * std::max(max_stage_ * b, 0);
    std::vector<Scalar> row(width);
    for (const auto& cov : cov_) {
      for (int tr = 1; tr <= t; ++tr)
        for (int j = 0; j < max_stage_ * b; ++j)
          row[(tr - 1) * max_stage_ * b + j] = cov.at(tr, k_ + j);
      acc_.absorb(row);
    }
    return acc_.rank();
  }

  int stage() const { return stage_; }

private:
  const BandedEndo& f_;
  int k_;
  int max_stage_;
  int stage_ = 0;
  detail::RankAccumulator acc_;
  std::vector<DenseStrip> cov_; // functionals of f^stage below level k
};

// CotrajEngine sized geometrically: the window cost scales with the deepest
// stage actually reached, not with the cap.
class GrowingCotrajEngine {
public:
  GrowingCotrajEngine(const BandedEndo& f, int k, int cap)
      : f_(f), k_(k), cap_(cap), max_stage_(std::min(cap, 8)) {
    eng_ = std::make_unique<CotrajEngine>(f_, k_, max_stage_);
  }

  int advance() {
    if (done_ + 1 > max_stage_) {
      max_stage_ = std::min(cap_, max_stage_ * 2);
      eng_ = std::make_unique<CotrajEngine>(f_, k_, max_stage_);
      for (int j = 0; j < done_; ++j) eng_->advance();
    }
    ++done_;
    return eng_->advance();
  }

private:
  const BandedEndo& f_;
  int k_, cap_, max_stage_, done_ = 0;
  std::unique_ptr<CotrajEngine> eng_;
};

} // namespace

int cotraj_codim(const BandedEndo& f, int k, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  CotrajEngine eng(f, k, n - 1);
  int r = 0;
  for (int j = 1; j < n; ++j) r = eng.advance();
  return r;
}

CotrajectoryTable gamma_sequence(const BandedEndo& f, int k, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  CotrajectoryTable table;
  table.level = k;
  table.codims.push_back(0);
  CotrajEngine eng(f, k, n_max);
  for (int j = 1; j <= n_max; ++j) table.codims.push_back(eng.advance());
  for (int n = 1; n <= n_max; ++n)
    table.gammas.push_back(table.codims[n] - table.codims[n - 1]);

  int tail = table.gammas.back();
  int from = n_max;
  while (from > 1 && table.gammas[from - 2] == tail) --from;
  table.stationary_from = from;
  if (n_max - from + 1 >= 2 || tail == 0) table.stationary_gamma = tail;
  return table;
}

namespace {

StabilizationCertificate run_gamma(const BandedEndo& f, int k,
                                   const StabilizationPolicy& policy,
                                   std::optional<int> bound) {
  if (policy.n_cap < 1 || policy.s_min < 1)
    throw std::invalid_argument("bad stabilization policy");
  // with a bound to chase, allow extra stages to get past a false plateau
  const int cap = bound ? std::max(policy.n_cap, 4 * policy.s_min +
                                                     policy.n_cap)
                        : policy.n_cap;
  GrowingCotrajEngine eng(f, k, cap);

  StabilizationCertificate cert;
  int prev_rank = 0;
  std::optional<int> prev_gamma;
  int run = 0, stab_at = 1;

  for (int j = 1; j <= cap; ++j) {
    int r = eng.advance();
    int gamma = r - prev_rank;
    prev_rank = r;
    if (prev_gamma && gamma > *prev_gamma)
      throw std::logic_error("gamma sequence increased");
    if (prev_gamma && gamma == *prev_gamma) {
      ++run;
    } else {
      run = 1;
      stab_at = j;
    }
    prev_gamma = gamma;

    // gamma is a non-increasing non-negative integer: zero is absorbing
    if (gamma == 0 ||
        (run >= policy.s_min && (!bound || gamma <= *bound))) {
      cert.certified = true;
      cert.value = gamma;
      cert.stabilized_at = stab_at;
      cert.agreement = run;
      cert.n_used = j;
      return cert;
    }
  }
  cert.certified = false;
  cert.value = prev_gamma.value_or(0);
  cert.stabilized_at = stab_at;
  cert.agreement = run;
  cert.n_used = cap;
  return cert;
}

} // namespace

StabilizationCertificate h_star(const BandedEndo& f, int k,
                                const StabilizationPolicy& policy) {
  return run_gamma(f, k, policy, std::nullopt);
}

namespace detail {

StabilizationCertificate h_star_bounded(const BandedEndo& f, int k,
                                        const StabilizationPolicy& policy,
                                        int bound) {
  return run_gamma(f, k, policy, bound);
}

void repair_monotone_sweep(
    std::vector<LevelResult>& levels,
    const std::function<StabilizationCertificate(int, int)>& recompute) {
  // walk from the top: every certified value bounds the certified values
  // below it (false plateaus only ever overestimate)
  std::optional<int> floor;
  for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i) {
    auto& lv = levels[i];
    if (!lv.cert.certified) continue;
    if (floor && lv.cert.value > *floor) {
      lv.cert = recompute(lv.level, *floor);
      if (lv.cert.certified && lv.cert.value > *floor)
        throw std::logic_error("bounded recompute exceeded its bound");
      if (!lv.cert.certified) continue;
    }
    floor = floor ? std::min(*floor, lv.cert.value) : lv.cert.value;
  }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Limit-free route

namespace {

// One step of the chain: U ∩ f(X), viewed in the window [k, k+W] with a full
// free tail beyond. Rows are images of the view's basis plus the images of
// the tail coordinates that reach back into the window; combinations must
// vanish below k.
WindowMatrix uplus_step(const BandedEndo& f, int k, int W,
                        const WindowMatrix& view) {
  const int t = f.space().tracks;
  const int b = f.band();
  const FieldSpec field = f.space().field;
  const auto below = window_labels(t, k - b, k - 1);
  const auto& labels = view.col_labels();

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(view.rows() + t * b);
  auto push_image = [&](const Vec& y) {
    std::vector<Scalar> combined = dense_row(y, below);
    std::vector<Scalar> win = dense_row(y, labels);
    combined.insert(combined.end(), win.begin(), win.end());
    rows.push_back(std::move(combined));
  };
  for (int r = 0; r < view.rows(); ++r) push_image(f.apply(view.row_vec(r)));
  for (int j = k + W + 1; j <= k + W + b; ++j)
    for (int tr = 1; tr <= t; ++tr)
      push_image(f.apply(Vec{{Coord{tr, j}, 1}}));

  auto payload =
      detail::constrain_rows(field, rows, static_cast<int>(below.size()));
  return WindowMatrix::from_rows(field, labels, std::move(payload));
}

int lff_value(const BandedEndo& f, int k, const WindowMatrix& view) {
  const int t = f.space().tracks;
  const int b = f.band();
  const auto below = window_labels(t, k - b, k - 1);
  detail::RankAccumulator acc(f.space().field,
                              static_cast<int>(below.size()));
  for (int r = 0; r < view.rows(); ++r)
    acc.absorb(dense_row(f.apply(view.row_vec(r)), below));
  return acc.rank();
}

} // namespace

UPlusChain u_plus(const BandedEndo& f, int k, int window) {
  const int t = f.space().tracks;
  const int b = f.band();
  const int W = std::max(window, std::max(b, 1));

  UPlusChain chain;
  chain.level = k;
  chain.window_lo = k;
  chain.window_hi = k + W;

  WindowMatrix view = WindowMatrix::full(
      f.space().field, window_labels(t, k, k + W));
  chain.subspaces.push_back(view);

  const int max_iter = t * (W + 1) + 2;
  for (int n = 0; n <= max_iter; ++n) {
    WindowMatrix next = uplus_step(f, k, W, view);
    if (row_space_sum(view, next).rows() != view.rows())
      throw std::logic_error("u_plus chain is not decreasing");
    chain.subspaces.push_back(next);
    if (next == view) {
      chain.stabilized_at = n;
      chain.fixed_point_verified = true;
      return chain;
    }
    view = std::move(next);
  }
  throw std::logic_error("u_plus chain failed to stabilize");
}

int h_star_limit_free(const BandedEndo& f, int k, int window_margin) {
  const int b1 = std::max(f.band(), 1);
  const int W0 = std::max(window_margin, 4 * b1 + 4);
  const auto bottom_labels =
      window_labels(f.space().tracks, k, k + W0);

  // accept only when a doubling of the window changes neither the value nor
  // the view's shadow on the original window; a fixed point reached inside a
  // too-small window is otherwise indistinguishable from the real chain
  int W = W0;
  std::optional<int> prev_value;
  std::optional<WindowMatrix> prev_bottom;
  for (int attempt = 0; attempt < 8; ++attempt) {
    UPlusChain chain = u_plus(f, k, W);
    const WindowMatrix& stable = chain.subspaces[chain.stabilized_at];
    int value = lff_value(f, k, stable);

    WindowMatrix bottom(f.space().field, bottom_labels);
    for (int r = 0; r < stable.rows(); ++r)
      bottom.append_row(dense_row(stable.row_vec(r), bottom_labels));
    bottom = rref(bottom);

    if (prev_value && *prev_value == value && *prev_bottom == bottom)
      return value;
    prev_value = value;
    prev_bottom = std::move(bottom);
    W *= 2;
  }
  throw WindowTooSmall("u_plus window did not certify after escalation");
}

// ---------------------------------------------------------------------------
// k-sweep

EntropyReport ent_star(const BandedEndo& f, const KSweepPolicy& sweep) {
  const int k_min = sweep.k_min.value_or(f.core_lo() - f.band() -
                                         f.period_left());
  int k_max = sweep.k_max.value_or(f.core_hi() + f.band() +
                                   f.period_right() + sweep.plateau);
  if (k_max < k_min) k_max = k_min;

  EntropyReport report;
  const int n_levels = k_max - k_min + 1;
  report.per_level.resize(n_levels);
  parallel_for(n_levels, [&](int i) {
    int k = k_min + i;
    report.per_level[i] = LevelResult{k, h_star(f, k, sweep.stab)};
  });

  detail::repair_monotone_sweep(report.per_level, [&](int level, int bound) {
    return detail::h_star_bounded(f, level, sweep.stab, bound);
  });

  // after repair, certified values are non-decreasing in k
  std::optional<int> last_certified;
  for (const auto& lv : report.per_level) {
    if (!lv.cert.certified) continue;
    if (last_certified && lv.cert.value < *last_certified)
      throw std::logic_error("H* not monotone in the sweep");
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

  const int plateau_needed = std::max(
      {sweep.plateau, f.period_left(), f.period_right()});
  int trailing = 0;
  for (int i = n_levels - 1; i >= 0; --i) {
    const auto& cert = report.per_level[i].cert;
    if (!cert.certified || cert.value != report.per_level.back().cert.value)
      break;
    ++trailing;
  }
  bool top_certified = report.per_level.back().cert.certified &&
                       trailing >= plateau_needed;

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
      report.value * std::log(static_cast<double>(f.space().field.p));
  return report;
}

// ---------------------------------------------------------------------------

int delta_dim(const BandedEndo& f, const BandedEndo& f_inv, int k) {
  if (!is_inverse_pair(f, f_inv))
    throw std::invalid_argument("delta_dim requires an automorphism with its"
                                " exact inverse");
  auto below_rank = [&](const BandedEndo& g) {
    const int t = g.space().tracks;
    const int b = g.band();
    const auto below = window_labels(t, k - b, k - 1);
    detail::RankAccumulator acc(g.space().field,
                                static_cast<int>(below.size()));
    for (int j = k; j < k + b; ++j)
      for (int tr = 1; tr <= t; ++tr)
        acc.absorb(dense_row(g.apply(Vec{{Coord{tr, j}, 1}}), below));
    return acc.rank();
  };
  // dim gU/(U ∩ gU) is the rank of the below-k part of g's columns from U
  return below_rank(f) - below_rank(f_inv);
}

ZeroEntropyVerdict zero_entropy_witness(const BandedEndo& f, int k,
                                        int n_cap) {
  if (n_cap < 1) throw std::invalid_argument("n_cap must be >= 1");
  StabilizationPolicy policy;
  GrowingCotrajEngine eng(f, k, n_cap);
  int prev_rank = 0;
  std::optional<int> prev_gamma;
  int run = 0;
  for (int j = 1; j <= n_cap; ++j) {
    int r = eng.advance();
    int gamma = r - prev_rank;
    prev_rank = r;
    if (gamma == 0) return {ZeroEntropyVerdict::Kind::Zero, j, 0};
    run = (prev_gamma && gamma == *prev_gamma) ? run + 1 : 1;
    prev_gamma = gamma;
    if (run >= policy.s_min)
      return {ZeroEntropyVerdict::Kind::Positive, j, gamma};
  }
  return {ZeroEntropyVerdict::Kind::Undetermined, n_cap,
          prev_gamma.value_or(0)};
}

WindowMatrix surjective_core_window(const BandedEndo& f, int window,
                                    const StabilizationPolicy& policy) {
  const int t = f.space().tracks;
  const int b = f.band();
  const FieldSpec field = f.space().field;
  const auto labels = window_labels(t, 1, window);

  std::map<int, std::vector<Vec>> images; // position j -> per-track f^n(e_j)
  auto view_of = [&]() {
    detail::RankAccumulator acc(field, static_cast<int>(labels.size()));
    for (const auto& [j, vecs] : images)
      for (const auto& v : vecs) acc.absorb(dense_row(v, labels));
    return WindowMatrix::from_rows(field, labels, acc.basis());
  };

  WindowMatrix prev = WindowMatrix::full(field, labels);
  int run = 0;
  for (int n = 1; n <= policy.n_cap; ++n) {
    for (auto& [j, vecs] : images)
      for (auto& v : vecs) v = f.apply(v);
    for (int j = window + (n - 1) * b + 1; j <= window + n * b; ++j) {
      if (j < 1) continue;
      std::vector<Vec> vecs;
      for (int tr = 1; tr <= t; ++tr) {
        Vec v{{Coord{tr, j}, 1}};
        for (int step = 0; step < n; ++step) v = f.apply(v);
        vecs.push_back(std::move(v));
      }
      images.emplace(j, std::move(vecs));
    }
    if (n == 1)
      for (int j = 1; j <= window; ++j) {
        std::vector<Vec> vecs;
        for (int tr = 1; tr <= t; ++tr)
          vecs.push_back(f.apply(Vec{{Coord{tr, j}, 1}}));
        images.emplace(j, std::move(vecs));
      }

    WindowMatrix view = view_of();
    run = (view == prev) ? run + 1 : 0;
    prev = std::move(view);
    if (run >= policy.s_min) return prev;
  }
  throw WindowTooSmall("surjective core did not stabilize in the window");
}

} // namespace llcent
