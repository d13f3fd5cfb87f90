#include "doctest.h"
#include "llcent/harness.hpp"
#include "llcent/sysfile.hpp"

using namespace llcent;

namespace {

const char* kBernoulliLeft = R"(# one-track left shift
[field]
p = 2

[space]
tracks = 1

[endo]
band = 1
core-range = 0 -1
left-period = 1
right-period = 1
left = 0 1 1 1 1
right = 0 1 1 1 1
)";

} // namespace

TEST_CASE("parse a minimal system") {
  SystemFile s = parse_system(kBernoulliLeft);
  CHECK(s.space.field.p == 2);
  CHECK(s.space.tracks == 1);
  CHECK(s.endo == bernoulli_left(SpaceSpec(FieldSpec(2), 1)));
  CHECK_FALSE(s.invariant_tracks.has_value());
  CHECK_FALSE(s.inverse.has_value());
}

TEST_CASE("round trip through print and parse") {
  SystemFile s = parse_system(kBernoulliLeft);
  SystemFile t = parse_system(print_system(s));
  CHECK(t.endo == s.endo);
  CHECK(t.space == s.space);

  // now with the optional sections
  SpaceSpec sp(FieldSpec(3), 2);
  SystemFile full{sp, bernoulli_left(sp), TrackSubspace({1}),
                  bernoulli_right(sp)};
  SystemFile back = parse_system(print_system(full));
  CHECK(back.endo == full.endo);
  REQUIRE(back.invariant_tracks.has_value());
  CHECK(back.invariant_tracks->tracks == std::vector<int>{1});
  REQUIRE(back.inverse.has_value());
  CHECK(*back.inverse == *full.inverse);
}

TEST_CASE("random endos survive the round trip") {
  std::mt19937_64 rng(4242);
  RandomCaseParams params;
  for (int trial = 0; trial < 20; ++trial) {
    BandedEndo f = random_endo(rng, params);
    SystemFile s{f.space(), f, std::nullopt, std::nullopt};
    SystemFile back = parse_system(print_system(s));
    CHECK(back.endo == f);
  }
}

TEST_CASE("prime powers are rejected at parse time") {
  std::string text = kBernoulliLeft;
  auto swap_p = [&](const std::string& val) {
    std::string t = text;
    t.replace(t.find("p = 2"), 5, "p = " + val);
    return t;
  };
  CHECK_THROWS_AS(parse_system(swap_p("4")), ParseError);
  CHECK_THROWS_AS(parse_system(swap_p("9")), ParseError);
  CHECK_THROWS_AS(parse_system(swap_p("1")), ParseError);
  try {
    parse_system(swap_p("8"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3); // the 'p = 8' line
    CHECK(std::string(e.what()).find("not prime") != std::string::npos);
  }
}

TEST_CASE("diagnostics carry line numbers") {
  auto expect_error_on_line = [](const std::string& text, int line) {
    try {
      parse_system(text);
      FAIL_CHECK("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };

  expect_error_on_line("p = 2\n", 1); // content before any section
  expect_error_on_line("[field]\np = 2\n[space]\ntracks = 0\n", 4);
  expect_error_on_line("[field]\np = 2\nnope\n", 3);
  expect_error_on_line("[field]\np = two\n", 2);
  expect_error_on_line("[what]\nx = 1\n", 1);

  // entry outside the declared band
  std::string bad = R"([field]
p = 2
[space]
tracks = 1
[endo]
band = 1
core-range = 0 -1
left-period = 1
right-period = 1
left = 0 1 1 2 1
)";
  expect_error_on_line(bad, 10);
}

TEST_CASE("invariant section is validated") {
  std::string text = std::string(kBernoulliLeft) + "\n[invariant]\ntracks = 3\n";
  CHECK_THROWS_AS(parse_system(text), ParseError);
  std::string good = std::string(kBernoulliLeft) + "\n[invariant]\ntracks = 1\n";
  SystemFile s = parse_system(good);
  REQUIRE(s.invariant_tracks.has_value());
  CHECK(s.invariant_tracks->tracks == std::vector<int>{1});
}
