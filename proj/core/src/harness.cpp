#include "llcent/harness.hpp"

#include <algorithm>
#include <mutex>

#include "llcent/parallel.hpp"

namespace llcent {

BandedEndo bernoulli_left(const SpaceSpec& space) {
  return uniform_shift(space, +1);
}

BandedEndo bernoulli_right(const SpaceSpec& space) {
  return uniform_shift(space, -1);
}

void SuiteReport::add(CheckResult r) {
  switch (r.status) {
    case CheckResult::Status::Pass: ++passed; break;
    case CheckResult::Status::Fail: ++failed; break;
    case CheckResult::Status::Uncertified: ++uncertified; break;
  }
  results.push_back(std::move(r));
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& r : other.results) add(r);
}

namespace {

std::string fmt_int(int v) { return std::to_string(v); }

CheckResult make(const std::string& case_name, const std::string& check,
                 CheckResult::Status status, std::string detail) {
  return CheckResult{case_name, check, status, std::move(detail)};
}

} // namespace

CheckResult addition_check(const SuiteCase& c, const VerifyBudget& budget) {
  if (!c.invariant)
    throw std::invalid_argument("addition_check needs an invariant subspace");
  const BandedEndo sub = restrict_to(c.endo, *c.invariant);
  const BandedEndo quot = quotient(c.endo, *c.invariant);

  EntropyReport full = ent_star(c.endo, budget.sweep);
  EntropyReport res = ent_star(sub, budget.sweep);
  EntropyReport quo = ent_star(quot, budget.sweep);

  std::string detail = fmt_int(full.value) + " vs " + fmt_int(res.value) +
                       " + " + fmt_int(quo.value);
  if (full.certified && res.certified && quo.certified) {
    bool ok = full.value == res.value + quo.value;
    return make(c.name, "addition",
                ok ? CheckResult::Status::Pass : CheckResult::Status::Fail,
                detail);
  }
  bool lower = full.value >= res.value + quo.value;
  return make(c.name, "addition", CheckResult::Status::Uncertified,
              detail + (lower ? " (lower bound holds)"
                              : " (uncertified values, no conclusion)"));
}

CheckResult monotonicity_check(const SuiteCase& c, const VerifyBudget& budget) {
  if (!c.invariant)
    throw std::invalid_argument("monotonicity_check needs an invariant");
  const BandedEndo sub = restrict_to(c.endo, *c.invariant);
  const BandedEndo quot = quotient(c.endo, *c.invariant);

  EntropyReport full = ent_star(c.endo, budget.sweep);
  EntropyReport res = ent_star(sub, budget.sweep);
  EntropyReport quo = ent_star(quot, budget.sweep);

  std::string detail = fmt_int(full.value) + " >= max(" + fmt_int(res.value) +
                       ", " + fmt_int(quo.value) + ")";
  if (!(full.certified && res.certified && quo.certified))
    return make(c.name, "monotonicity", CheckResult::Status::Uncertified,
                detail);
  bool ok = full.value >= std::max(res.value, quo.value);
  return make(c.name, "monotonicity",
              ok ? CheckResult::Status::Pass : CheckResult::Status::Fail,
              detail);
}

CheckResult conjugation_check(const BandedEndo& f, const BandedEndo& conj,
                              const BandedEndo& conj_inv,
                              const VerifyBudget& budget,
                              const std::string& case_name) {
  if (!is_inverse_pair(conj, conj_inv))
    throw std::invalid_argument("conjugator is not invertible");
  BandedEndo g = compose(compose(conj, f), conj_inv);
  EntropyReport a = ent_star(f, budget.sweep);
  EntropyReport b = ent_star(g, budget.sweep);
  std::string detail = fmt_int(a.value) + " vs conjugated " + fmt_int(b.value);
  if (!(a.certified && b.certified))
    return make(case_name, "conjugation", CheckResult::Status::Uncertified,
                detail);
  return make(case_name, "conjugation",
              a.value == b.value ? CheckResult::Status::Pass
                                 : CheckResult::Status::Fail,
              detail);
}

CheckResult weak_addition_check(const BandedEndo& f1, const BandedEndo& f2,
                                const VerifyBudget& budget,
                                const std::string& case_name) {
  BandedEndo prod = block_diagonal(f1, f2);
  EntropyReport a = ent_star(f1, budget.sweep);
  EntropyReport b = ent_star(f2, budget.sweep);
  EntropyReport ab = ent_star(prod, budget.sweep);
  std::string detail = fmt_int(ab.value) + " vs " + fmt_int(a.value) + " + " +
                       fmt_int(b.value);
  if (!(a.certified && b.certified && ab.certified))
    return make(case_name, "weak-addition", CheckResult::Status::Uncertified,
                detail);
  return make(case_name, "weak-addition",
              ab.value == a.value + b.value ? CheckResult::Status::Pass
                                            : CheckResult::Status::Fail,
              detail);
}

CheckResult loglaw_check(const BandedEndo& f, const VerifyBudget& budget,
                         const std::string& case_name) {
  EntropyReport base = ent_star(f, budget.sweep);
  if (!base.certified)
    return make(case_name, "loglaw", CheckResult::Status::Uncertified,
                "base value uncertified");
  for (int k = 0; k <= budget.loglaw_max_power; ++k) {
    EntropyReport pk = ent_star(power(f, k), budget.sweep);
    if (!pk.certified)
      return make(case_name, "loglaw", CheckResult::Status::Uncertified,
                  "power " + fmt_int(k) + " uncertified");
    if (pk.value != k * base.value)
      return make(case_name, "loglaw", CheckResult::Status::Fail,
                  "power " + fmt_int(k) + ": " + fmt_int(pk.value) +
                      " != " + fmt_int(k * base.value));
  }
  return make(case_name, "loglaw", CheckResult::Status::Pass,
              "powers 0.." + fmt_int(budget.loglaw_max_power));
}

CheckResult compact_reduction_check(const BandedEndo& f,
                                    const VerifyBudget& budget,
                                    const std::string& case_name) {
  EntropyReport a = ent_star(f, budget.sweep);
  EntropyReport b = ent_star(compact_component(f), budget.sweep);
  std::string detail = fmt_int(a.value) + " vs compact part " +
                       fmt_int(b.value);
  if (!(a.certified && b.certified))
    return make(case_name, "compact-reduction",
                CheckResult::Status::Uncertified, detail);
  return make(case_name, "compact-reduction",
              a.value == b.value ? CheckResult::Status::Pass
                                 : CheckResult::Status::Fail,
              detail);
}

CheckResult modulus_check(const SuiteCase& c, const VerifyBudget& budget) {
  if (!c.inverse)
    throw std::invalid_argument("modulus_check needs an inverse");
  // delta must not depend on the level
  const int k0 = c.endo.core_lo() - c.endo.band() - c.endo.period_left();
  const int k1 = c.endo.core_hi() + c.endo.band() + c.endo.period_right() + 2;
  int delta = delta_dim(c.endo, *c.inverse, k0);
  for (int k = k0 + 1; k <= k1; ++k)
    if (delta_dim(c.endo, *c.inverse, k) != delta)
      return make(c.name, "modulus", CheckResult::Status::Fail,
                  "delta depends on the level");

  EntropyReport fwd = ent_star(c.endo, budget.sweep);
  EntropyReport bwd = ent_star(*c.inverse, budget.sweep);
  std::string detail = "delta=" + fmt_int(delta) + ", " + fmt_int(bwd.value) +
                       " vs " + fmt_int(fwd.value) + " - delta";
  if (!(fwd.certified && bwd.certified))
    return make(c.name, "modulus", CheckResult::Status::Uncertified, detail);
  return make(c.name, "modulus",
              bwd.value == fwd.value - delta ? CheckResult::Status::Pass
                                             : CheckResult::Status::Fail,
              detail);
}

CheckResult bridge_case_check(const BandedEndo& f, const VerifyBudget& budget,
                              const std::string& case_name) {
  const int k_lo = f.core_lo() - f.band() - f.period_left();
  const int k_hi = f.core_hi() + f.band() + f.period_right();
  for (int k = k_lo; k <= k_hi; ++k) {
    BridgeReport rep = bridge_check(f, k, budget.bridge_n_max);
    if (!rep.ok()) {
      const auto& m = rep.mismatches.front();
      return make(case_name, "bridge", CheckResult::Status::Fail,
                  "level " + fmt_int(k) + " n=" + fmt_int(m.n) + ": " +
                      fmt_int(m.cotraj_codim) + " != " +
                      fmt_int(m.trajectory_dim));
    }
  }
  EntropyReport top = ent_star(f, budget.sweep);
  EntropyReport alg = ent_alg(dualize(f), budget.sweep);
  std::string detail = "ent*=" + fmt_int(top.value) +
                       ", ent(dual)=" + fmt_int(alg.value);
  if (!(top.certified && alg.certified))
    return make(case_name, "bridge", CheckResult::Status::Uncertified, detail);
  return make(case_name, "bridge",
              top.value == alg.value ? CheckResult::Status::Pass
                                     : CheckResult::Status::Fail,
              detail);
}

SuiteReport run_suite(const std::vector<SuiteCase>& cases,
                      const VerifyBudget& budget) {
  std::vector<SuiteReport> partial(cases.size());
  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    const SuiteCase& c = cases[i];
    SuiteReport& rep = partial[i];

    if (c.expected_ent_star) {
      EntropyReport got = ent_star(c.endo, budget.sweep);
      std::string detail =
          fmt_int(got.value) + " vs expected " + fmt_int(*c.expected_ent_star);
      if (!got.certified)
        rep.add(make(c.name, "expected-value",
                     CheckResult::Status::Uncertified, detail));
      else
        rep.add(make(c.name, "expected-value",
                     got.value == *c.expected_ent_star
                         ? CheckResult::Status::Pass
                         : CheckResult::Status::Fail,
                     detail));
    }
    rep.add(loglaw_check(c.endo, budget, c.name));
    rep.add(compact_reduction_check(c.endo, budget, c.name));
    rep.add(bridge_case_check(c.endo, budget, c.name));
    {
      std::vector<int> levels = {c.endo.core_lo(),
                                 c.endo.core_hi() + c.endo.band() + 1};
      OracleReport orc = cross_validate(c.endo, levels, budget.oracle_n_max);
      CheckResult::Status st =
          orc.ok() ? (orc.checked > 0 ? CheckResult::Status::Pass
                                      : CheckResult::Status::Uncertified)
                   : CheckResult::Status::Fail;
      rep.add(make(c.name, "oracle", st,
                   std::to_string(orc.checked) + " checked, " +
                       std::to_string(orc.skipped) + " over cap, " +
                       std::to_string(orc.mismatches.size()) + " mismatches"));
    }
    if (c.invariant) {
      rep.add(addition_check(c, budget));
      rep.add(monotonicity_check(c, budget));
    }
    if (c.inverse) rep.add(modulus_check(c, budget));
  });

  SuiteReport out;
  for (const auto& rep : partial) out.merge(rep);
  std::sort(out.results.begin(), out.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return std::tie(a.case_name, a.check) <
                     std::tie(b.case_name, b.check);
            });
  return out;
}

// ---------------------------------------------------------------------------
// Curated suite

namespace {

BandedEndo lambda_endo(const SpaceSpec& space) {
  // (x_n) -> (x_{n+1} + x_{n+2}); band 2, fully uniform
  EndoBuilder b(space);
  b.band = 2;
  for (int tr = 1; tr <= space.tracks; ++tr) {
    b.set_left(0, tr, tr, 1, 1);
    b.set_left(0, tr, tr, 2, 1);
    b.set_right(0, tr, tr, 1, 1);
    b.set_right(0, tr, tr, 2, 1);
  }
  return b.build();
}

BandedEndo triangular_shifts(const SpaceSpec& two_tracks) {
  // [[shift, coupling],[0, shift]]: track 1 is invariant
  EndoBuilder b(two_tracks);
  b.band = 1;
  for (int tr = 1; tr <= 2; ++tr) {
    b.set_left(0, tr, tr, 1, 1);
    b.set_right(0, tr, tr, 1, 1);
  }
  b.set_left(0, 1, 2, 0, 1);
  b.set_right(0, 1, 2, 0, 1);
  return b.build();
}

BandedEndo defect_shift(const SpaceSpec& space) {
  // left shift with row 0 zeroed: information does not cross the defect, so
  // levels at or below 0 see nothing while levels above see the full shift
  EndoBuilder b(space);
  b.band = 1;
  b.core_lo = 0;
  b.core_hi = 0;
  for (int tr = 1; tr <= space.tracks; ++tr) {
    b.set_left(0, tr, tr, 1, 1);
    b.set_right(0, tr, tr, 1, 1);
  }
  return b.build();
}

BandedEndo discrete_only_shift(const SpaceSpec& space) {
  // supported on positions <= 0 in and out: a shift on the discrete part
  EndoBuilder b(space);
  b.band = 1;
  b.core_lo = 0;
  b.core_hi = 0;
  b.period_right = 1; // zero above
  for (int tr = 1; tr <= space.tracks; ++tr) b.set_left(0, tr, tr, 1, 1);
  // row 0 must not read position 1: leave it zero
  return b.build();
}

} // namespace

std::vector<SuiteCase> shipped_suite() {
  std::vector<SuiteCase> cases;

  SpaceSpec f2_1(FieldSpec(2), 1);
  SpaceSpec f2_2(FieldSpec(2), 2);
  SpaceSpec f3_1(FieldSpec(3), 1);
  SpaceSpec f5_2(FieldSpec(5), 2);

  {
    SuiteCase c{"bernoulli-left", bernoulli_left(f2_1), std::nullopt,
                bernoulli_right(f2_1), 1};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"bernoulli-right", bernoulli_right(f2_1), std::nullopt,
                bernoulli_left(f2_1), 0};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"identity", identity_endo(f2_1), std::nullopt,
                identity_endo(f2_1), 0};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"expanding-band2", lambda_endo(f2_1), std::nullopt,
                std::nullopt, 2};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"two-track-left-shift", bernoulli_left(f2_2),
                TrackSubspace({1}), bernoulli_right(f2_2), 2};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"triangular-shifts", triangular_shifts(f2_2),
                TrackSubspace({1}), std::nullopt, 2};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"shift-by-two", uniform_shift(f3_1, 2), std::nullopt,
                uniform_shift(f3_1, -2), 2};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"left-times-right",
                block_diagonal(bernoulli_left(f2_1), bernoulli_right(f2_1)),
                TrackSubspace({1}),
                block_diagonal(bernoulli_right(f2_1), bernoulli_left(f2_1)),
                1};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"five-track-left", bernoulli_left(f5_2), TrackSubspace({1}),
                bernoulli_right(f5_2), 2};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"discrete-shift", discrete_only_shift(f2_1), std::nullopt,
                std::nullopt, 0};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"defect-shift", defect_shift(f2_1), std::nullopt, std::nullopt,
                1};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"one-sided-left", compact_component(bernoulli_left(f2_1)),
                std::nullopt, std::nullopt, 1};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"one-sided-right", compact_component(bernoulli_right(f2_1)),
                std::nullopt, std::nullopt, 0};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"three-track-left-f3",
                bernoulli_left(SpaceSpec(FieldSpec(3), 3)), TrackSubspace({1, 2}),
                bernoulli_right(SpaceSpec(FieldSpec(3), 3)), 3};
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<std::pair<BandedEndo, BandedEndo>> standard_conjugators(
    const SpaceSpec& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<BandedEndo, BandedEndo>> out;
  out.emplace_back(identity_endo(space), identity_endo(space));
  out.emplace_back(uniform_shift(space, 1), uniform_shift(space, -1));

  const int t = space.tracks;
  if (t >= 2) {
    // swap two tracks
    int a = 1, b = 2;
    EndoBuilder sw(space);
    sw.band = 0;
    for (int tr = 1; tr <= t; ++tr) {
      int target = tr == a ? b : tr == b ? a : tr;
      sw.set_left(0, target, tr, 0, 1);
      sw.set_right(0, target, tr, 0, 1);
    }
    BandedEndo s = sw.build();
    out.emplace_back(s, s);

    // unipotent coupling id + u E_{1,2}
    Scalar u = 1 + rng() % std::max<std::uint32_t>(space.field.p - 1, 1);
    EndoBuilder up(space);
    up.band = 0;
    for (int tr = 1; tr <= t; ++tr) {
      up.set_left(0, tr, tr, 0, 1);
      up.set_right(0, tr, tr, 0, 1);
    }
    up.set_left(0, 1, 2, 0, u);
    up.set_right(0, 1, 2, 0, u);
    EndoBuilder dn(space);
    dn.band = 0;
    for (int tr = 1; tr <= t; ++tr) {
      dn.set_left(0, tr, tr, 0, 1);
      dn.set_right(0, tr, tr, 0, 1);
    }
    dn.set_left(0, 1, 2, 0, space.field.neg(u));
    dn.set_right(0, 1, 2, 0, space.field.neg(u));
    out.emplace_back(up.build(), dn.build());
  }
  if (space.field.p > 2) {
    // invertible diagonal scaling
    EndoBuilder d(space);
    d.band = 0;
    EndoBuilder di(space);
    di.band = 0;
    for (int tr = 1; tr <= t; ++tr) {
      Scalar c = 1 + rng() % (space.field.p - 1);
      d.set_left(0, tr, tr, 0, c);
      d.set_right(0, tr, tr, 0, c);
      di.set_left(0, tr, tr, 0, space.field.inv(c));
      di.set_right(0, tr, tr, 0, space.field.inv(c));
    }
    out.emplace_back(d.build(), di.build());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random cases

BandedEndo random_endo(std::mt19937_64& rng, const RandomCaseParams& params) {
  const FieldSpec field(params.primes[rng() % params.primes.size()]);
  const int t = 1 + static_cast<int>(rng() % params.max_tracks);
  SpaceSpec space(field, t);

  EndoBuilder b(space);
  b.band = static_cast<int>(rng() % (params.max_band + 1));
  const int core_rows = static_cast<int>(rng() % (params.max_core_rows + 1));
  b.core_lo = static_cast<int>(rng() % 5) - 2;
  b.core_hi = b.core_lo + core_rows - 1;
  b.period_left = 1 + static_cast<int>(rng() % params.max_period);
  b.period_right = 1 + static_cast<int>(rng() % params.max_period);

  auto random_value = [&]() -> Scalar {
    return 1 + static_cast<Scalar>(rng() % (field.p - 1));
  };
  auto maybe = [&]() { return rng() % 100 < (unsigned)params.density_percent; };

  for (int i = b.core_lo; i <= b.core_hi; ++i)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o)
          if (maybe()) b.set_core(i, to, ti, o, random_value());
  for (int r = 0; r < b.period_left; ++r)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o)
          if (maybe()) b.set_left(r, to, ti, o, random_value());
  for (int r = 0; r < b.period_right; ++r)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o)
          if (maybe()) b.set_right(r, to, ti, o, random_value());
  return b.build();
}

SuiteCase random_triangular_case(std::mt19937_64& rng,
                                 const RandomCaseParams& params,
                                 const std::string& name) {
  RandomCaseParams p = params;
  p.max_tracks = std::max(2, p.max_tracks);
  BandedEndo raw = [&] {
    while (true) {
      BandedEndo f = random_endo(rng, p);
      if (f.space().tracks >= 2) return f;
    }
  }();
  const int t = raw.space().tracks;
  const int split = 1 + static_cast<int>(rng() % (t - 1));
  std::vector<int> keep;
  for (int tr = 1; tr <= split; ++tr) keep.push_back(tr);
  TrackSubspace w(keep);

  // zero the blocked entries (inputs in w, outputs outside w)
  EndoBuilder b(raw.space());
  b.band = raw.band();
  b.core_lo = raw.core_lo();
  b.core_hi = raw.core_hi();
  b.period_left = raw.period_left();
  b.period_right = raw.period_right();
  auto blocked = [&](int to, int ti) { return !w.contains(to) && w.contains(ti); };
  for (int i = b.core_lo; i <= b.core_hi; ++i)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o) {
          Scalar v = raw.entry(i, to, ti, o);
          if (v != 0 && !blocked(to, ti)) b.set_core(i, to, ti, o, v);
        }
  for (int r = 0; r < b.period_left; ++r)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o) {
          Scalar v = raw.entry(b.core_lo - 1 - r, to, ti, o);
          if (v != 0 && !blocked(to, ti)) b.set_left(r, to, ti, o, v);
        }
  for (int r = 0; r < b.period_right; ++r)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b.band; o <= b.band; ++o) {
          Scalar v = raw.entry(b.core_hi + 1 + r, to, ti, o);
          if (v != 0 && !blocked(to, ti)) b.set_right(r, to, ti, o, v);
        }

  SuiteCase c{name, b.build(), w, std::nullopt, std::nullopt};
  return c;
}

std::pair<BandedEndo, BandedEndo> random_automorphism(
    std::mt19937_64& rng, const RandomCaseParams& params) {
  const FieldSpec field(params.primes[rng() % params.primes.size()]);
  const int t = 1 + static_cast<int>(rng() % params.max_tracks);
  SpaceSpec space(field, t);

  BandedEndo fwd = identity_endo(space);
  BandedEndo bwd = identity_endo(space);
  const int steps = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < steps; ++s) {
    switch (rng() % 3) {
      case 0: { // shift power
        int sh = 1 + static_cast<int>(rng() % 2);
        if (rng() % 2) sh = -sh;
        fwd = compose(uniform_shift(space, sh), fwd);
        bwd = compose(bwd, uniform_shift(space, -sh));
        break;
      }
      case 1: { // diagonal scaling
        EndoBuilder d(space), di(space);
        d.band = di.band = 0;
        for (int tr = 1; tr <= t; ++tr) {
          Scalar c = 1 + static_cast<Scalar>(rng() % (field.p - 1));
          d.set_left(0, tr, tr, 0, c);
          d.set_right(0, tr, tr, 0, c);
          di.set_left(0, tr, tr, 0, field.inv(c));
          di.set_right(0, tr, tr, 0, field.inv(c));
        }
        fwd = compose(d.build(), fwd);
        bwd = compose(bwd, di.build());
        break;
      }
      default: { // unipotent coupling with an offset
        if (t < 2) continue;
        int a = 1 + static_cast<int>(rng() % t);
        int c = 1 + static_cast<int>(rng() % t);
        if (a == c) continue;
        int off = static_cast<int>(rng() % 3) - 1;
        Scalar u = 1 + static_cast<Scalar>(rng() % (field.p - 1));
        EndoBuilder up(space), dn(space);
        up.band = dn.band = std::abs(off);
        for (int tr = 1; tr <= t; ++tr) {
          up.set_left(0, tr, tr, 0, 1);
          up.set_right(0, tr, tr, 0, 1);
          dn.set_left(0, tr, tr, 0, 1);
          dn.set_right(0, tr, tr, 0, 1);
        }
        up.set_left(0, a, c, off, u);
        up.set_right(0, a, c, off, u);
        dn.set_left(0, a, c, off, field.neg(u));
        dn.set_right(0, a, c, off, field.neg(u));
        fwd = compose(up.build(), fwd);
        bwd = compose(bwd, dn.build());
        break;
      }
    }
  }
  return {fwd, bwd};
}

std::vector<SuiteCase> random_suite(std::uint64_t seed, int count,
                                    const RandomCaseParams& params) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteCase> cases;
  cases.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::string name = "random-" + std::to_string(i);
    switch (i % 3) {
      case 0: {
        SuiteCase c{name, random_endo(rng, params), std::nullopt, std::nullopt,
                    std::nullopt};
        cases.push_back(std::move(c));
        break;
      }
      case 1:
        cases.push_back(random_triangular_case(rng, params, name));
        break;
      default: {
        auto [fwd, bwd] = random_automorphism(rng, params);
        SuiteCase c{name, fwd, std::nullopt, bwd, std::nullopt};
        cases.push_back(std::move(c));
        break;
      }
    }
  }
  return cases;
}

} // namespace llcent
