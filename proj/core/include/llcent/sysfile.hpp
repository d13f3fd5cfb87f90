// Textual system descriptions.
//
// Line-oriented key-value text with [section] headers; comments start with
// '#'. Matrix entries are 5-tuples (row, out-track, in-track, offset, value);
// template entries use the phase instead of the row. Example:
//
//   [field]
//   p = 2
//   [space]
//   tracks = 1
//   [endo]
//   band = 1
//   core-range = 0 -1
//   left-period = 1
//   right-period = 1
//   left = 0 1 1 1 1
//   right = 0 1 1 1 1
//
// [invariant] (a track list) and [inverse] (a second endo) are optional.

#pragma once

#include <iosfwd>
#include <string>

#include "llcent/endo.hpp"

namespace llcent {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

struct SystemFile {
  SpaceSpec space;
  BandedEndo endo;
  std::optional<TrackSubspace> invariant_tracks;
  std::optional<BandedEndo> inverse;
};

SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);

// Canonical text; parse(print_system(s)) reproduces s exactly.
std::string print_system(const SystemFile& system);

} // namespace llcent
