// Coordinate model of a locally linearly compact space over F_p.
//
// A space with t tracks has one coordinate per (track, position) with
// position ranging over all integers. Vectors are supported arbitrarily on
// positions >= 1 (the linearly compact part, a direct product) and finitely
// on positions <= 0 (the discrete part, a direct sum). The basic open U_k is
// the set of vectors vanishing at every position below k; each U_k is a
// linearly compact open subspace and {U_k} is a neighborhood basis at 0.

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "llcent/field.hpp"

namespace llcent {

struct Coord {
  int track;    // 1-based
  int position; // any integer

  auto operator<=>(const Coord&) const = default;
};

struct SpaceSpec {
  FieldSpec field;
  int tracks; // >= 1 for constructed spaces; 0 denotes the zero space
              // (it arises as the quotient by the full track set)

  SpaceSpec(FieldSpec f, int t) : field(f), tracks(t) {
    if (t < 0) throw std::invalid_argument("negative track count");
  }
  bool operator==(const SpaceSpec&) const = default;
};

// U_k; U_k contains U_k' exactly when k <= k'.
struct BasicOpen {
  int level;
  bool contains(const BasicOpen& other) const { return level <= other.level; }
};

// Closed span of all coordinates whose track lies in `tracks` (sorted, unique).
struct TrackSubspace {
  std::vector<int> tracks;

  explicit TrackSubspace(std::vector<int> t);
  bool contains(int track) const;
  std::vector<int> complement(int total_tracks) const;
};

// Finitely supported vector (also used for continuous characters on the dual
// side). Zero values are never stored.
using Vec = std::map<Coord, Scalar>;

void add_to(Vec& v, Coord c, Scalar value, const FieldSpec& field);

// All coordinates (track, position) with position in [pos_lo, pos_hi],
// sorted in Coord order.
std::vector<Coord> window_labels(int tracks, int pos_lo, int pos_hi);

// Restriction of v to the given sorted labels, as a dense row.
std::vector<Scalar> dense_row(const Vec& v, const std::vector<Coord>& labels);

} // namespace llcent
