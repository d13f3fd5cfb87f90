#include "llcent/endo.hpp"

#include <algorithm>
#include <numeric>

namespace llcent {

namespace {

int positive_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t block_size_for(int tracks, int band) {
  return static_cast<std::size_t>(tracks) * tracks * (2 * band + 1);
}

std::size_t block_slot(int tracks, int band, int track_out, int track_in,
                       int offset) {
  return (static_cast<std::size_t>(track_out - 1) * tracks + (track_in - 1)) *
             (2 * band + 1) +
         (offset + band);
}

} // namespace

// ---------------------------------------------------------------------------
// EndoBuilder

std::size_t EndoBuilder::block_size() const {
  return block_size_for(space.tracks, band);
}

std::size_t EndoBuilder::slot(std::vector<Scalar>& blocks, int block_index,
                              int track_out, int track_in, int offset) {
  if (track_out < 1 || track_out > space.tracks || track_in < 1 ||
      track_in > space.tracks)
    throw std::invalid_argument("track index out of range");
  if (offset < -band || offset > band)
    throw std::invalid_argument("offset exceeds band");
  std::size_t need = static_cast<std::size_t>(block_index + 1) * block_size();
  if (blocks.size() < need) blocks.resize(need, 0);
  return static_cast<std::size_t>(block_index) * block_size() +
         block_slot(space.tracks, band, track_out, track_in, offset);
}

EndoBuilder& EndoBuilder::set_core(int i, int track_out, int track_in,
                                   int offset, Scalar value) {
  if (i < core_lo || i > core_hi)
    throw std::invalid_argument("core row outside core range");
  core_entries[slot(core_entries, i - core_lo, track_out, track_in, offset)] =
      value;
  return *this;
}

EndoBuilder& EndoBuilder::set_left(int phase, int track_out, int track_in,
                                   int offset, Scalar value) {
  if (phase < 0 || phase >= period_left)
    throw std::invalid_argument("left phase out of range");
  left_entries[slot(left_entries, phase, track_out, track_in, offset)] = value;
  return *this;
}

EndoBuilder& EndoBuilder::set_right(int phase, int track_out, int track_in,
                                    int offset, Scalar value) {
  if (phase < 0 || phase >= period_right)
    throw std::invalid_argument("right phase out of range");
  right_entries[slot(right_entries, phase, track_out, track_in, offset)] =
      value;
  return *this;
}

BandedEndo EndoBuilder::build() const { return BandedEndo(*this); }

// ---------------------------------------------------------------------------
// BandedEndo

BandedEndo::BandedEndo(const EndoBuilder& parts) : space_(parts.space) {
  if (parts.band < 0) throw std::invalid_argument("negative band");
  if (parts.period_left < 1 || parts.period_right < 1)
    throw std::invalid_argument("periods must be >= 1");
  if (parts.core_hi < parts.core_lo - 1)
    throw std::invalid_argument("malformed core range");

  band_ = parts.band;
  core_lo_ = parts.core_lo;
  core_hi_ = parts.core_hi;
  period_left_ = parts.period_left;
  period_right_ = parts.period_right;

  const std::size_t bs = block_size();
  core_ = parts.core_entries;
  core_.resize(static_cast<std::size_t>(core_hi_ - core_lo_ + 1) * bs, 0);
  left_ = parts.left_entries;
  left_.resize(static_cast<std::size_t>(period_left_) * bs, 0);
  right_ = parts.right_entries;
  right_.resize(static_cast<std::size_t>(period_right_) * bs, 0);

  for (Scalar v : core_)
    if (v >= space_.field.p)
      throw std::invalid_argument("entry not reduced mod p");
  for (Scalar v : left_)
    if (v >= space_.field.p)
      throw std::invalid_argument("entry not reduced mod p");
  for (Scalar v : right_)
    if (v >= space_.field.p)
      throw std::invalid_argument("entry not reduced mod p");

  canonicalize();
}

std::size_t BandedEndo::block_size() const {
  return block_size_for(space_.tracks, band_);
}

const Scalar* BandedEndo::row_ptr(int out_pos) const {
  const std::size_t bs = block_size();
  if (out_pos >= core_lo_ && out_pos <= core_hi_)
    return core_.data() + static_cast<std::size_t>(out_pos - core_lo_) * bs;
  if (out_pos > core_hi_)
    return right_.data() +
           static_cast<std::size_t>(
               positive_mod(out_pos - core_hi_ - 1, period_right_)) *
               bs;
  return left_.data() +
         static_cast<std::size_t>(
             positive_mod(core_lo_ - 1 - out_pos, period_left_)) *
             bs;
}

std::vector<Scalar> BandedEndo::row_block(int out_pos) const {
  const Scalar* p = row_ptr(out_pos);
  return std::vector<Scalar>(p, p + block_size());
}

Scalar BandedEndo::entry(int out_pos, int track_out, int track_in,
                         int offset) const {
  if (track_out < 1 || track_out > space_.tracks || track_in < 1 ||
      track_in > space_.tracks)
    return 0;
  if (offset < -band_ || offset > band_) return 0;
  return row_ptr(out_pos)[block_slot(space_.tracks, band_, track_out, track_in,
                                     offset)];
}

void BandedEndo::rebuild_band(int new_band) {
  const int t = space_.tracks;
  auto shrink = [&](const std::vector<Scalar>& src, int blocks) {
    std::vector<Scalar> dst(
        static_cast<std::size_t>(blocks) * block_size_for(t, new_band), 0);
    for (int blk = 0; blk < blocks; ++blk)
      for (int to = 1; to <= t; ++to)
        for (int ti = 1; ti <= t; ++ti)
          for (int o = -new_band; o <= new_band; ++o)
            dst[blk * block_size_for(t, new_band) +
                block_slot(t, new_band, to, ti, o)] =
                src[blk * block_size_for(t, band_) +
                    block_slot(t, band_, to, ti, o)];
    return dst;
  };
  core_ = shrink(core_, core_hi_ - core_lo_ + 1);
  left_ = shrink(left_, period_left_);
  right_ = shrink(right_, period_right_);
  band_ = new_band;
}

void BandedEndo::canonicalize() {
  const int t = space_.tracks;

  auto block_at = [&](const std::vector<Scalar>& v, int idx) {
    return std::vector<Scalar>(v.begin() + idx * block_size(),
                               v.begin() + (idx + 1) * block_size());
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // shed unused outer offsets
    while (band_ > 0) {
      bool outer_zero = true;
      auto scan = [&](const std::vector<Scalar>& v, int blocks) {
        for (int blk = 0; blk < blocks && outer_zero; ++blk)
          for (int to = 1; to <= t && outer_zero; ++to)
            for (int ti = 1; ti <= t && outer_zero; ++ti)
              if (v[blk * block_size() +
                    block_slot(t, band_, to, ti, band_)] != 0 ||
                  v[blk * block_size() +
                    block_slot(t, band_, to, ti, -band_)] != 0)
                outer_zero = false;
      };
      scan(core_, core_hi_ - core_lo_ + 1);
      scan(left_, period_left_);
      scan(right_, period_right_);
      if (!outer_zero) break;
      rebuild_band(band_ - 1);
      changed = true;
    }

    // reduce template periods to the smallest true period
    auto reduce_period = [&](std::vector<Scalar>& v, int& period) {
      for (int d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        bool ok = true;
        for (int r = d; r < period && ok; ++r)
          if (!std::equal(v.begin() + r * block_size(),
                          v.begin() + (r + 1) * block_size(),
                          v.begin() + (r % d) * block_size()))
            ok = false;
        if (ok) {
          v.resize(static_cast<std::size_t>(d) * block_size());
          period = d;
          changed = true;
          return;
        }
      }
    };
    reduce_period(left_, period_left_);
    reduce_period(right_, period_right_);

    // absorb core rows that already match the adjacent template
    auto rotate_back = [&](std::vector<Scalar>& v, int period) {
      // new[r] = old[(r - 1 + period) % period]
      std::vector<Scalar> out(v.size());
      for (int r = 0; r < period; ++r) {
        int src = positive_mod(r - 1, period);
        std::copy(v.begin() + src * block_size(),
                  v.begin() + (src + 1) * block_size(),
                  out.begin() + r * block_size());
      }
      v = std::move(out);
    };
    while (core_hi_ >= core_lo_ &&
           block_at(core_, core_hi_ - core_lo_) ==
               block_at(right_, period_right_ - 1)) {
      core_.resize(core_.size() - block_size());
      --core_hi_;
      rotate_back(right_, period_right_);
      changed = true;
    }
    while (core_hi_ >= core_lo_ &&
           block_at(core_, 0) == block_at(left_, period_left_ - 1)) {
      core_.erase(core_.begin(), core_.begin() + block_size());
      ++core_lo_;
      rotate_back(left_, period_left_);
      changed = true;
    }
  }

  // a fully uniform matrix gets the anchor 0
  if (core_hi_ < core_lo_ && period_left_ == 1 && period_right_ == 1 &&
      left_ == right_ && core_lo_ != 0) {
    core_lo_ = 0;
    core_hi_ = -1;
  }
}

bool BandedEndo::operator==(const BandedEndo& other) const {
  if (space_ != other.space_) return false;
  const int b = std::max(band_, other.band_);
  const int lo = std::min(core_lo_, other.core_lo_) -
                 std::lcm(period_left_, other.period_left_);
  const int hi = std::max(core_hi_, other.core_hi_) +
                 std::lcm(period_right_, other.period_right_);
  const int t = space_.tracks;
  for (int i = lo; i <= hi; ++i)
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b; o <= b; ++o)
          if (entry(i, to, ti, o) != other.entry(i, to, ti, o)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

BandedEndo identity_endo(const SpaceSpec& space) {
  EndoBuilder b(space);
  b.band = 0;
  for (int tr = 1; tr <= space.tracks; ++tr) {
    b.set_left(0, tr, tr, 0, 1);
    b.set_right(0, tr, tr, 0, 1);
  }
  return b.build();
}

BandedEndo zero_endo(const SpaceSpec& space) {
  EndoBuilder b(space);
  b.band = 0;
  return b.build();
}

BandedEndo uniform_shift(const SpaceSpec& space, int s) {
  EndoBuilder b(space);
  b.band = std::abs(s);
  for (int tr = 1; tr <= space.tracks; ++tr) {
    b.set_left(0, tr, tr, s, 1);
    b.set_right(0, tr, tr, s, 1);
  }
  return b.build();
}

BandedEndo compose(const BandedEndo& f, const BandedEndo& g) {
  if (f.space() != g.space())
    throw std::invalid_argument("space mismatch in compose");
  const SpaceSpec space = f.space();
  const FieldSpec field = space.field;
  const int t = space.tracks;
  const int bf = f.band(), bg = g.band();

  EndoBuilder out(space);
  out.band = bf + bg;
  out.core_lo = std::min(f.core_lo(), g.core_lo() - bf);
  out.core_hi = std::max(f.core_hi(), g.core_hi() + bf);
  out.period_left = std::lcm(f.period_left(), g.period_left());
  out.period_right = std::lcm(f.period_right(), g.period_right());

  auto fill_row = [&](int i, auto&& set) {
    for (int to = 1; to <= t; ++to)
      for (int tm = 1; tm <= t; ++tm)
        for (int d = -bf; d <= bf; ++d) {
          Scalar fe = f.entry(i, to, tm, d);
          if (fe == 0) continue;
          for (int ti = 1; ti <= t; ++ti)
            for (int e = -bg; e <= bg; ++e) {
              Scalar ge = g.entry(i + d, tm, ti, e);
              if (ge == 0) continue;
              set(to, ti, d + e, field.mul(fe, ge));
            }
        }
  };

  for (int i = out.core_lo; i <= out.core_hi; ++i) {
    std::vector<Scalar> acc(block_size_for(t, out.band), 0);
    fill_row(i, [&](int to, int ti, int o, Scalar v) {
      std::size_t s = block_slot(t, out.band, to, ti, o);
      acc[s] = field.add(acc[s], v);
    });
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -out.band; o <= out.band; ++o) {
          Scalar v = acc[block_slot(t, out.band, to, ti, o)];
          if (v != 0) out.set_core(i, to, ti, o, v);
        }
  }
  for (int r = 0; r < out.period_right; ++r) {
    int i = out.core_hi + 1 + r;
    std::vector<Scalar> acc(block_size_for(t, out.band), 0);
    fill_row(i, [&](int to, int ti, int o, Scalar v) {
      std::size_t s = block_slot(t, out.band, to, ti, o);
      acc[s] = field.add(acc[s], v);
    });
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -out.band; o <= out.band; ++o) {
          Scalar v = acc[block_slot(t, out.band, to, ti, o)];
          if (v != 0) out.set_right(r, to, ti, o, v);
        }
  }
  for (int r = 0; r < out.period_left; ++r) {
    int i = out.core_lo - 1 - r;
    std::vector<Scalar> acc(block_size_for(t, out.band), 0);
    fill_row(i, [&](int to, int ti, int o, Scalar v) {
      std::size_t s = block_slot(t, out.band, to, ti, o);
      acc[s] = field.add(acc[s], v);
    });
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -out.band; o <= out.band; ++o) {
          Scalar v = acc[block_slot(t, out.band, to, ti, o)];
          if (v != 0) out.set_left(r, to, ti, o, v);
        }
  }
  return out.build();
}

BandedEndo power(const BandedEndo& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  BandedEndo acc = identity_endo(f.space());
  for (int i = 0; i < k; ++i) acc = compose(acc, f);
  return acc;
}

Vec BandedEndo::apply(const Vec& x) const {
  const int t = space_.tracks;
  const FieldSpec field = space_.field;
  Vec out;
  for (const auto& [coord, v] : x) {
    for (int to = 1; to <= t; ++to)
      for (int o = -band_; o <= band_; ++o) {
        int i = coord.position - o;
        Scalar e = entry(i, to, coord.track, o);
        if (e != 0) add_to(out, {to, i}, field.mul(e, v), field);
      }
  }
  return out;
}

Vec BandedEndo::apply_functional(const Vec& chi) const {
  const int t = space_.tracks;
  const FieldSpec field = space_.field;
  Vec out;
  for (const auto& [coord, v] : chi) {
    for (int ti = 1; ti <= t; ++ti)
      for (int o = -band_; o <= band_; ++o) {
        Scalar e = entry(coord.position, coord.track, ti, o);
        if (e != 0)
          add_to(out, {ti, coord.position + o}, field.mul(e, v), field);
      }
  }
  return out;
}

BandedEndo dualize(const BandedEndo& f) {
  const SpaceSpec space = f.space();
  const int t = space.tracks;
  const int b = f.band();

  EndoBuilder out(space);
  out.band = b;
  out.core_lo = 1 - b - f.core_hi();
  out.core_hi = 1 + b - f.core_lo();
  out.period_left = f.period_right();
  out.period_right = f.period_left();

  auto dual_entry = [&](int a, int to, int ti, int o) {
    return f.entry(1 - a - o, ti, to, o);
  };
  auto fill = [&](int a, auto&& set) {
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b; o <= b; ++o) {
          Scalar v = dual_entry(a, to, ti, o);
          if (v != 0) set(to, ti, o, v);
        }
  };

  for (int a = out.core_lo; a <= out.core_hi; ++a)
    fill(a, [&](int to, int ti, int o, Scalar v) {
      out.set_core(a, to, ti, o, v);
    });
  for (int r = 0; r < out.period_right; ++r)
    fill(out.core_hi + 1 + r, [&](int to, int ti, int o, Scalar v) {
      out.set_right(r, to, ti, o, v);
    });
  for (int r = 0; r < out.period_left; ++r)
    fill(out.core_lo - 1 - r, [&](int to, int ti, int o, Scalar v) {
      out.set_left(r, to, ti, o, v);
    });
  return out.build();
}

bool check_invariant(const BandedEndo& f, const TrackSubspace& w) {
  const int t = f.space().tracks;
  for (int tr : w.tracks)
    if (tr > t) throw std::invalid_argument("track index exceeds track count");

  auto row_ok = [&](int i) {
    for (int to = 1; to <= t; ++to) {
      if (w.contains(to)) continue;
      for (int ti : w.tracks)
        for (int o = -f.band(); o <= f.band(); ++o)
          if (f.entry(i, to, ti, o) != 0) return false;
    }
    return true;
  };

  for (int i = f.core_lo(); i <= f.core_hi(); ++i)
    if (!row_ok(i)) return false;
  for (int r = 0; r < f.period_right(); ++r)
    if (!row_ok(f.core_hi() + 1 + r)) return false;
  for (int r = 0; r < f.period_left(); ++r)
    if (!row_ok(f.core_lo() - 1 - r)) return false;
  return true;
}

namespace {

BandedEndo track_submatrix(const BandedEndo& f, const std::vector<int>& keep) {
  SpaceSpec sub(f.space().field, static_cast<int>(keep.size()));
  EndoBuilder out(sub);
  out.band = f.band();
  out.core_lo = f.core_lo();
  out.core_hi = f.core_hi();
  out.period_left = f.period_left();
  out.period_right = f.period_right();

  const int n = static_cast<int>(keep.size());
  auto fill = [&](int i, auto&& set) {
    for (int to = 1; to <= n; ++to)
      for (int ti = 1; ti <= n; ++ti)
        for (int o = -f.band(); o <= f.band(); ++o) {
          Scalar v = f.entry(i, keep[to - 1], keep[ti - 1], o);
          if (v != 0) set(to, ti, o, v);
        }
  };
  for (int i = out.core_lo; i <= out.core_hi; ++i)
    fill(i,
         [&](int to, int ti, int o, Scalar v) { out.set_core(i, to, ti, o, v); });
  for (int r = 0; r < out.period_right; ++r)
    fill(out.core_hi + 1 + r,
         [&](int to, int ti, int o, Scalar v) { out.set_right(r, to, ti, o, v); });
  for (int r = 0; r < out.period_left; ++r)
    fill(out.core_lo - 1 - r,
         [&](int to, int ti, int o, Scalar v) { out.set_left(r, to, ti, o, v); });
  return out.build();
}

} // namespace

BandedEndo restrict_to(const BandedEndo& f, const TrackSubspace& w) {
  if (!check_invariant(f, w))
    throw std::invalid_argument("subspace is not invariant");
  return track_submatrix(f, w.tracks);
}

BandedEndo quotient(const BandedEndo& f, const TrackSubspace& w) {
  if (!check_invariant(f, w))
    throw std::invalid_argument("subspace is not invariant");
  return track_submatrix(f, w.complement(f.space().tracks));
}

BandedEndo block_diagonal(const BandedEndo& f1, const BandedEndo& f2) {
  if (f1.space().field != f2.space().field)
    throw std::invalid_argument("field mismatch in block_diagonal");
  const int t1 = f1.space().tracks, t2 = f2.space().tracks;
  SpaceSpec space(f1.space().field, t1 + t2);

  EndoBuilder out(space);
  out.band = std::max(f1.band(), f2.band());
  out.core_lo = std::min(f1.core_lo(), f2.core_lo());
  out.core_hi = std::max(f1.core_hi(), f2.core_hi());
  out.period_left = std::lcm(f1.period_left(), f2.period_left());
  out.period_right = std::lcm(f1.period_right(), f2.period_right());

  auto fill = [&](int i, auto&& set) {
    for (int to = 1; to <= t1; ++to)
      for (int ti = 1; ti <= t1; ++ti)
        for (int o = -f1.band(); o <= f1.band(); ++o) {
          Scalar v = f1.entry(i, to, ti, o);
          if (v != 0) set(to, ti, o, v);
        }
    for (int to = 1; to <= t2; ++to)
      for (int ti = 1; ti <= t2; ++ti)
        for (int o = -f2.band(); o <= f2.band(); ++o) {
          Scalar v = f2.entry(i, to, ti, o);
          if (v != 0) set(t1 + to, t1 + ti, o, v);
        }
  };
  for (int i = out.core_lo; i <= out.core_hi; ++i)
    fill(i,
         [&](int to, int ti, int o, Scalar v) { out.set_core(i, to, ti, o, v); });
  for (int r = 0; r < out.period_right; ++r)
    fill(out.core_hi + 1 + r,
         [&](int to, int ti, int o, Scalar v) { out.set_right(r, to, ti, o, v); });
  for (int r = 0; r < out.period_left; ++r)
    fill(out.core_lo - 1 - r,
         [&](int to, int ti, int o, Scalar v) { out.set_left(r, to, ti, o, v); });
  return out.build();
}

BandedEndo compact_component(const BandedEndo& f) {
  const int t = f.space().tracks;
  const int b = f.band();

  EndoBuilder out(f.space());
  out.band = b;
  out.core_lo = std::min(f.core_lo(), 1);
  out.core_hi = std::max(f.core_hi(), b);
  out.period_left = 1; // all rows at positions <= 0 vanish
  out.period_right = f.period_right();

  for (int i = out.core_lo; i <= out.core_hi; ++i) {
    if (i <= 0) continue;
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b; o <= b; ++o) {
          if (i + o <= 0) continue;
          Scalar v = f.entry(i, to, ti, o);
          if (v != 0) out.set_core(i, to, ti, o, v);
        }
  }
  for (int r = 0; r < out.period_right; ++r) {
    int i = out.core_hi + 1 + r; // i >= b+1, so i and i+o are both >= 1
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -b; o <= b; ++o) {
          Scalar v = f.entry(i, to, ti, o);
          if (v != 0) out.set_right(r, to, ti, o, v);
        }
  }
  return out.build();
}

bool is_inverse_pair(const BandedEndo& f, const BandedEndo& g) {
  if (f.space() != g.space()) return false;
  BandedEndo id = identity_endo(f.space());
  return compose(f, g) == id && compose(g, f) == id;
}

} // namespace llcent
