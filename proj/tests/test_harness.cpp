#include "doctest.h"
#include "llcent/harness.hpp"

#include <random>

using namespace llcent;

namespace {
const SpaceSpec F2_1(FieldSpec(2), 1);
const SpaceSpec F2_2(FieldSpec(2), 2);
} // namespace

TEST_CASE("bernoulli baselines") {
  VerifyBudget budget;
  CHECK(ent_star(bernoulli_left(F2_1), budget.sweep).value == 1);
  CHECK(ent_star(bernoulli_right(F2_1), budget.sweep).value == 0);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t = 1; t <= 3; ++t) {
      EntropyReport rep =
          ent_star(bernoulli_left(SpaceSpec(FieldSpec(p), t)), budget.sweep);
      CHECK(rep.certified);
      CHECK(rep.value == t);
    }
}

TEST_CASE("addition check on the curated triangular cases") {
  VerifyBudget budget;
  for (const SuiteCase& c : shipped_suite()) {
    if (!c.invariant) continue;
    CheckResult r = addition_check(c, budget);
    CHECK(r.status == CheckResult::Status::Pass);
    CheckResult m = monotonicity_check(c, budget);
    CHECK(m.status == CheckResult::Status::Pass);
  }
}

TEST_CASE("addition check downgrades on uncertified values") {
  VerifyBudget tight;
  tight.sweep.stab.n_cap = 2; // nothing certifies
  tight.sweep.stab.s_min = 8;
  SuiteCase c{"tight", bernoulli_left(F2_2), TrackSubspace({1}), std::nullopt,
              std::nullopt};
  CheckResult r = addition_check(c, tight);
  CHECK(r.status == CheckResult::Status::Uncertified);
}

TEST_CASE("conjugation invariance") {
  VerifyBudget budget;
  BandedEndo f = block_diagonal(bernoulli_left(F2_1), bernoulli_right(F2_1));
  for (const auto& [c, c_inv] : standard_conjugators(f.space(), 99)) {
    CheckResult r = conjugation_check(f, c, c_inv, budget, "diag");
    CHECK(r.status == CheckResult::Status::Pass);
  }
  // conjugating by a shift leaves the value of the band-2 map unchanged
  EndoBuilder b(F2_1);
  b.band = 2;
  b.set_left(0, 1, 1, 1, 1);
  b.set_left(0, 1, 1, 2, 1);
  b.set_right(0, 1, 1, 1, 1);
  b.set_right(0, 1, 1, 2, 1);
  BandedEndo lam = b.build();
  CheckResult r = conjugation_check(lam, bernoulli_left(F2_1),
                                    bernoulli_right(F2_1), budget, "lambda");
  CHECK(r.status == CheckResult::Status::Pass);
  CHECK_THROWS_AS(
      conjugation_check(lam, bernoulli_left(F2_1), bernoulli_left(F2_1),
                        budget, "bad"),
      std::invalid_argument);
}

TEST_CASE("weak addition") {
  VerifyBudget budget;
  CheckResult r = weak_addition_check(bernoulli_left(F2_1),
                                      bernoulli_right(F2_1), budget, "pair");
  CHECK(r.status == CheckResult::Status::Pass);
}

TEST_CASE("run_suite on the shipped cases passes everything") {
  VerifyBudget budget;
  SuiteReport rep = run_suite(shipped_suite(), budget);
  CHECK(rep.failed == 0);
  CHECK(rep.passed > 0);
  // order is deterministic by (case, check)
  for (std::size_t i = 1; i < rep.results.size(); ++i) {
    auto a = std::tie(rep.results[i - 1].case_name, rep.results[i - 1].check);
    auto b = std::tie(rep.results[i].case_name, rep.results[i].check);
    CHECK(a <= b);
  }
}

TEST_CASE("empty suite gives an empty report") {
  SuiteReport rep = run_suite({}, VerifyBudget{});
  CHECK(rep.results.empty());
  CHECK(rep.passed == 0);
  CHECK(rep.failed == 0);
}

TEST_CASE("random suite members satisfy construction invariants") {
  std::vector<SuiteCase> cases = random_suite(1234, 24);
  CHECK(cases.size() == 24);
  for (const SuiteCase& c : cases) {
    if (c.invariant) CHECK(check_invariant(c.endo, *c.invariant));
    if (c.inverse) CHECK(is_inverse_pair(c.endo, *c.inverse));
  }
  // deterministic given the seed
  std::vector<SuiteCase> again = random_suite(1234, 24);
  for (std::size_t i = 0; i < cases.size(); ++i)
    CHECK(cases[i].endo == again[i].endo);
}

TEST_CASE("random suite passes the theorem checks") {
  VerifyBudget budget;
  budget.bridge_n_max = 6;
  RandomCaseParams params;
  params.max_tracks = 2;
  params.max_band = 2;
  params.max_core_rows = 4;
  SuiteReport rep = run_suite(random_suite(77, 12, params), budget);
  CHECK(rep.failed == 0);
}
