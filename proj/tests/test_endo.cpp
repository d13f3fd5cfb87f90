#include "doctest.h"
#include "llcent/harness.hpp"

#include <random>

using namespace llcent;

namespace {

const SpaceSpec F2_1(FieldSpec(2), 1);
const SpaceSpec F2_2(FieldSpec(2), 2);
const SpaceSpec F3_2(FieldSpec(3), 2);

Vec unit(int track, int pos) { return Vec{{Coord{track, pos}, 1}}; }

} // namespace

TEST_CASE("basic opens are nested by level") {
  BasicOpen u1{1}, u3{3};
  CHECK(u1.contains(u3));      // vanishing below 3 implies vanishing below 1
  CHECK_FALSE(u3.contains(u1));
  CHECK(u1.contains(u1));
}

TEST_CASE("identity and zero") {
  BandedEndo id = identity_endo(F2_1);
  CHECK(id.entry(0, 1, 1, 0) == 1);
  CHECK(id.entry(7, 1, 1, 0) == 1);
  CHECK(id.entry(-3, 1, 1, 0) == 1);
  CHECK(id.band() == 0);

  BandedEndo z = zero_endo(F2_1);
  CHECK(z.apply(unit(1, 5)).empty());
}

TEST_CASE("compose with identity and shift inverses") {
  BandedEndo sigma = bernoulli_left(F2_1);
  BandedEndo rho = bernoulli_right(F2_1);
  BandedEndo id = identity_endo(F2_1);

  CHECK(compose(id, sigma) == sigma);
  CHECK(compose(sigma, id) == sigma);
  CHECK(compose(sigma, rho) == id);
  CHECK(compose(rho, sigma) == id);
  CHECK(is_inverse_pair(sigma, rho));

  BandedEndo sigma2 = compose(sigma, sigma);
  CHECK(sigma2 == uniform_shift(F2_1, 2));
  CHECK(sigma2.entry(0, 1, 1, 2) == 1);
  CHECK(sigma2.entry(0, 1, 1, 1) == 0);
}

TEST_CASE("compose is associative on random endos") {
  std::mt19937_64 rng(5);
  RandomCaseParams params;
  params.max_band = 2;
  params.max_core_rows = 4;
  for (int trial = 0; trial < 12; ++trial) {
    BandedEndo f = random_endo(rng, params);
    std::mt19937_64 r2(rng()), r3(rng());
    RandomCaseParams same = params;
    same.primes = {f.space().field.p};
    same.max_tracks = 1; // rebuilt below with the right track count
    auto make_same_space = [&](std::mt19937_64& r) {
      while (true) {
        BandedEndo g = random_endo(r, params);
        if (g.space() == f.space()) return g;
      }
    };
    BandedEndo g = make_same_space(r2);
    BandedEndo h = make_same_space(r3);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("apply matches entry definition") {
  BandedEndo sigma = bernoulli_left(F2_1);
  Vec y = sigma.apply(unit(1, 5));
  REQUIRE(y.size() == 1);
  CHECK(y.begin()->first == Coord{1, 4}); // (sigma x)_n = x_{n+1}

  BandedEndo id = identity_endo(F2_2);
  Vec x = unit(2, -3);
  CHECK(id.apply(x) == x);
}

TEST_CASE("continuity witness: banded image support") {
  std::mt19937_64 rng(17);
  RandomCaseParams params;
  for (int trial = 0; trial < 30; ++trial) {
    BandedEndo f = random_endo(rng, params);
    int k = static_cast<int>(rng() % 9) - 4;
    Vec x;
    for (int j = 0; j < 5; ++j) {
      int pos = k + f.band() + static_cast<int>(rng() % 10);
      int tr = 1 + static_cast<int>(rng() % f.space().tracks);
      Scalar v = 1 + static_cast<Scalar>(rng() % (f.space().field.p - 1));
      add_to(x, {tr, pos}, v, f.space().field);
    }
    for (const auto& [coord, v] : f.apply(x)) CHECK(coord.position >= k);
  }
}

TEST_CASE("dualize of the left shift moves dual coordinates up") {
  BandedEndo sigma = bernoulli_left(F2_1);
  BandedEndo dual = dualize(sigma);
  // (dual chi)_a = chi_{a+1}
  Vec y = dual.apply(unit(1, 3));
  REQUIRE(y.size() == 1);
  CHECK(y.begin()->first == Coord{1, 2});
  CHECK(dual == uniform_shift(F2_1, 1));
}

TEST_CASE("dualize is an involution and contravariant") {
  std::mt19937_64 rng(29);
  RandomCaseParams params;
  for (int trial = 0; trial < 20; ++trial) {
    BandedEndo f = random_endo(rng, params);
    CHECK(dualize(dualize(f)) == f);
  }
  for (int trial = 0; trial < 12; ++trial) {
    BandedEndo f = random_endo(rng, params);
    std::mt19937_64 r2(rng());
    BandedEndo g = [&] {
      while (true) {
        BandedEndo cand = random_endo(r2, params);
        if (cand.space() == f.space()) return cand;
      }
    }();
    CHECK(dualize(compose(f, g)) == compose(dualize(g), dualize(f)));
  }
}

TEST_CASE("dual pairing identity on random vectors") {
  // <f x, chi> = <x, dual(f) chi> with <x, chi> = sum_n x_(t,n) chi_(t,1-n)
  std::mt19937_64 rng(31);
  RandomCaseParams params;
  auto pairing = [](const FieldSpec& field, const Vec& x, const Vec& chi) {
    Scalar s = 0;
    for (const auto& [c, v] : x) {
      auto it = chi.find({c.track, 1 - c.position});
      if (it != chi.end()) s = field.add(s, field.mul(v, it->second));
    }
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    BandedEndo f = random_endo(rng, params);
    const FieldSpec field = f.space().field;
    Vec x, chi;
    for (int j = 0; j < 6; ++j) {
      int tr = 1 + static_cast<int>(rng() % f.space().tracks);
      add_to(x, {tr, static_cast<int>(rng() % 13) - 6},
             static_cast<Scalar>(rng() % field.p), field);
      int tr2 = 1 + static_cast<int>(rng() % f.space().tracks);
      add_to(chi, {tr2, static_cast<int>(rng() % 13) - 6},
             static_cast<Scalar>(rng() % field.p), field);
    }
    CHECK(pairing(field, f.apply(x), chi) ==
          pairing(field, x, dualize(f).apply(chi)));
  }
}

TEST_CASE("track invariance and restriction") {
  // [[A, B], [0, D]] leaves track 1 invariant
  EndoBuilder b(F2_2);
  b.band = 1;
  b.set_left(0, 1, 1, 1, 1);
  b.set_right(0, 1, 1, 1, 1); // A = shift
  b.set_left(0, 1, 2, 0, 1);
  b.set_right(0, 1, 2, 0, 1); // B = coupling
  b.set_left(0, 2, 2, -1, 1);
  b.set_right(0, 2, 2, -1, 1); // D = right shift
  BandedEndo f = b.build();

  CHECK(check_invariant(f, TrackSubspace({1})));
  CHECK_FALSE(check_invariant(f, TrackSubspace({2}))); // B != 0

  CHECK(restrict_to(f, TrackSubspace({1})) == bernoulli_left(F2_1));
  CHECK(quotient(f, TrackSubspace({1})) == bernoulli_right(F2_1));
  CHECK_THROWS_AS(restrict_to(f, TrackSubspace({2})), std::invalid_argument);

  // block diagonal is invariant for any split
  BandedEndo diag = block_diagonal(bernoulli_left(F2_1), bernoulli_right(F2_1));
  CHECK(check_invariant(diag, TrackSubspace({1})));
  CHECK(check_invariant(diag, TrackSubspace({2})));
  CHECK(restrict_to(diag, TrackSubspace({1})) == bernoulli_left(F2_1));
  CHECK(restrict_to(diag, TrackSubspace({2})) == bernoulli_right(F2_1));
  CHECK(diag.band() == 1);

  // quotient by all tracks is the zero-space endomorphism
  BandedEndo nothing = quotient(diag, TrackSubspace({1, 2}));
  CHECK(nothing.space().tracks == 0);
}

TEST_CASE("restriction commutes with composition on invariant subspaces") {
  std::mt19937_64 rng(41);
  RandomCaseParams params;
  for (int trial = 0; trial < 15; ++trial) {
    SuiteCase c = random_triangular_case(rng, params, "t");
    std::mt19937_64 r2(rng());
    SuiteCase d = [&] {
      while (true) {
        SuiteCase cand = random_triangular_case(r2, params, "t2");
        if (cand.endo.space() == c.endo.space() &&
            cand.invariant->tracks == c.invariant->tracks)
          return cand;
      }
    }();
    BandedEndo fg = compose(c.endo, d.endo);
    REQUIRE(check_invariant(fg, *c.invariant));
    CHECK(restrict_to(fg, *c.invariant) ==
          compose(restrict_to(c.endo, *c.invariant),
                  restrict_to(d.endo, *c.invariant)));
    CHECK(quotient(fg, *c.invariant) ==
          compose(quotient(c.endo, *c.invariant),
                  quotient(d.endo, *c.invariant)));
  }
}

TEST_CASE("compact component") {
  BandedEndo sigma = bernoulli_left(F2_1);
  BandedEndo cc = compact_component(sigma);
  // one-sided left shift: rows >= 1 keep the offset-1 entry reading >= 2
  CHECK(cc.entry(1, 1, 1, 1) == 1);
  CHECK(cc.entry(0, 1, 1, 1) == 0);
  CHECK(cc.entry(-4, 1, 1, 1) == 0);
  CHECK(compact_component(cc) == cc);

  BandedEndo rho = bernoulli_right(F2_1);
  BandedEndo rc = compact_component(rho);
  CHECK(rc.entry(2, 1, 1, -1) == 1);
  CHECK(rc.entry(1, 1, 1, -1) == 0); // would read position 0
  CHECK(rc.entry(0, 1, 1, -1) == 0);
}

TEST_CASE("equality is entrywise, not representational") {
  // same matrix described with different cores and periods
  EndoBuilder a(F2_1);
  a.band = 1;
  a.core_lo = 0;
  a.core_hi = 1;
  a.period_left = 2;
  a.period_right = 1;
  a.set_core(0, 1, 1, 1, 1);
  a.set_core(1, 1, 1, 1, 1);
  a.set_left(0, 1, 1, 1, 1);
  a.set_left(1, 1, 1, 1, 1);
  a.set_right(0, 1, 1, 1, 1);
  BandedEndo redundant = a.build();
  CHECK(redundant == bernoulli_left(F2_1));
  // canonical form shed the core and the fake period
  CHECK(redundant.core_hi() < redundant.core_lo());
  CHECK(redundant.period_left() == 1);
}

TEST_CASE("builder validation") {
  EndoBuilder b(F3_2);
  b.band = 1;
  CHECK_THROWS_AS(b.set_core(0, 1, 1, 0, 1), std::invalid_argument); // empty core
  CHECK_THROWS_AS(b.set_left(0, 3, 1, 0, 1), std::invalid_argument); // track
  CHECK_THROWS_AS(b.set_left(0, 1, 1, 2, 1), std::invalid_argument); // offset
  CHECK_THROWS_AS(b.set_left(2, 1, 1, 0, 1), std::invalid_argument); // phase
  b.set_left(0, 1, 1, 0, 5);
  CHECK_THROWS_AS(b.build(), std::invalid_argument); // 5 not reduced mod 3

  EndoBuilder c(F3_2);
  c.period_left = 0;
  CHECK_THROWS_AS(c.build(), std::invalid_argument);
}
