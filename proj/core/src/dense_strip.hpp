// Private helper: dense covectors/vectors over a contiguous position range,
// used by the incremental entropy engines. Not installed.

#pragma once

#include "llcent/endo.hpp"

namespace llcent::strip {

struct DenseStrip {
  int tracks = 0, lo = 0, hi = -1;
  std::vector<Scalar> data; // (track-1)*len + (pos-lo)

  DenseStrip() = default;
  DenseStrip(int t, int lo_, int hi_)
      : tracks(t), lo(lo_), hi(hi_),
        data(static_cast<std::size_t>(t) * (hi_ - lo_ + 1), 0) {}

  int len() const { return hi - lo + 1; }
  Scalar at(int track, int pos) const {
    if (pos < lo || pos > hi) return 0;
    return data[static_cast<std::size_t>(track - 1) * len() + (pos - lo)];
  }
  void add(int track, int pos, Scalar v, const FieldSpec& field) {
    if (v == 0) return;
    if (pos < lo || pos > hi) throw std::logic_error("strip overflow");
    Scalar& slot =
        data[static_cast<std::size_t>(track - 1) * len() + (pos - lo)];
    slot = field.add(slot, v);
  }
};

// chi -> chi∘f (row covector times the matrix)
inline DenseStrip step_functional(const BandedEndo& f, const DenseStrip& x) {
  const int t = f.space().tracks;
  const int b = f.band();
  const FieldSpec field = f.space().field;
  DenseStrip y(t, x.lo - b, x.hi + b);
  for (int to = 1; to <= t; ++to)
    for (int pos = x.lo; pos <= x.hi; ++pos) {
      Scalar v = x.at(to, pos);
      if (v == 0) continue;
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b; o <= b; ++o) {
          Scalar e = f.entry(pos, to, ti, o);
          if (e != 0) y.add(ti, pos + o, field.mul(e, v), field);
        }
    }
  return y;
}

// x -> f(x) (matrix times column vector)
inline DenseStrip step_vector(const BandedEndo& f, const DenseStrip& x) {
  const int t = f.space().tracks;
  const int b = f.band();
  const FieldSpec field = f.space().field;
  DenseStrip y(t, x.lo - b, x.hi + b);
  for (int ti = 1; ti <= t; ++ti)
    for (int pos = x.lo; pos <= x.hi; ++pos) {
      Scalar v = x.at(ti, pos);
      if (v == 0) continue;
      for (int to = 1; to <= t; ++to)
        for (int o = -b; o <= b; ++o) {
          Scalar e = f.entry(pos - o, to, ti, o);
          if (e != 0) y.add(to, pos - o, field.mul(e, v), field);
        }
    }
  return y;
}

} // namespace llcent::strip
