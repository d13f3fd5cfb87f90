#include "doctest.h"
#include "llcent/harness.hpp"

#include <random>

using namespace llcent;

namespace {
const SpaceSpec F2_1(FieldSpec(2), 1);

BandedEndo lambda_f2() {
  EndoBuilder b(F2_1);
  b.band = 2;
  b.set_left(0, 1, 1, 1, 1);
  b.set_left(0, 1, 1, 2, 1);
  b.set_right(0, 1, 1, 1, 1);
  b.set_right(0, 1, 1, 2, 1);
  return b.build();
}
} // namespace

TEST_CASE("enumeration cotrajectory codimensions") {
  CHECK(enum_cotraj_codim(identity_endo(F2_1), 1, 4, 4) == 0);
  // sigma, k=1, n=3: C_3 = U_3, codimension 2
  CHECK(enum_cotraj_codim(bernoulli_left(F2_1), 1, 3, 3) == 2);
  // lambda, k=1, n=2: x_1 = x_2 = 0
  CHECK(enum_cotraj_codim(lambda_f2(), 1, 2, 3) == 2);
  // cap enforced
  CHECK_THROWS_AS(enum_cotraj_codim(identity_endo(F2_1), 1, 2, 17),
                  std::invalid_argument);
}

TEST_CASE("enumeration trajectory dimensions") {
  CHECK(enum_trajectory_dim(dualize(identity_endo(F2_1)), 1, 4) == 0);
  CHECK(enum_trajectory_dim(dualize(bernoulli_left(F2_1)), 1, 4) == 3);
  CHECK(enum_trajectory_dim(dualize(lambda_f2()), 1, 2) == 2);
}

TEST_CASE("cross validation on the named maps") {
  for (const BandedEndo& f :
       {identity_endo(F2_1), bernoulli_left(F2_1), bernoulli_right(F2_1),
        lambda_f2()}) {
    OracleReport rep = cross_validate(f, {0, 1, 2}, 6);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("single coordinate window: enumeration is exhaustive") {
  // any map, window of one coordinate: p vectors checked directly
  for (std::uint32_t p : {2u, 3u, 5u}) {
    SpaceSpec sp(FieldSpec(p), 1);
    OracleReport rep = cross_validate(bernoulli_left(sp), {1}, 2);
    CHECK(rep.ok());
  }
}

TEST_CASE("cross validation on random endos") {
  std::mt19937_64 rng(57);
  RandomCaseParams params;
  params.max_tracks = 2;
  params.max_band = 2;
  int validated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BandedEndo f = random_endo(rng, params);
    OracleReport rep = cross_validate(f, {0, 1}, 5);
    if (!rep.ok()) {
      CAPTURE(trial);
      REQUIRE(rep.mismatches.empty());
    }
    validated += rep.checked;
  }
  CHECK(validated > 100);
}
