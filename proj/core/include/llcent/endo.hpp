// Continuous endomorphisms as eventually periodic banded matrices.
//
// A BandedEndo is a Z x Z matrix over F_p, indexed by (track, position) pairs,
// with entry((t_out,i),(t_in,j)) = 0 whenever |i - j| > band. Rows inside the
// core range [core_lo, core_hi] are stored explicitly; rows above the core
// repeat with period_right, rows below with period_left. Any matrix of this
// shape is row-finite, maps the space into itself, and satisfies
// preimage(U_k) >= U_{k+band}, so it is a continuous endomorphism; the
// constructor checks the representation invariants. The class is closed under
// composition, dualization, restriction, quotients and direct sums, all
// computed exactly (no truncation).

#pragma once

#include <optional>
#include <vector>

#include "llcent/space.hpp"

namespace llcent {

class BandedEndo;

// Mutable staging area for constructing a BandedEndo entry by entry.
struct EndoBuilder {
  SpaceSpec space;
  int band = 0;
  int core_lo = 0, core_hi = -1; // inclusive; hi = lo - 1 is an empty core
  int period_left = 1, period_right = 1;

  explicit EndoBuilder(SpaceSpec s) : space(s) {}

  EndoBuilder& set_core(int i, int track_out, int track_in, int offset,
                        Scalar value);
  EndoBuilder& set_left(int phase, int track_out, int track_in, int offset,
                        Scalar value);
  EndoBuilder& set_right(int phase, int track_out, int track_in, int offset,
                         Scalar value);

  BandedEndo build() const;

  std::vector<Scalar> core_entries, left_entries, right_entries;

private:
  std::size_t block_size() const;
  std::size_t slot(std::vector<Scalar>& blocks, int block_index, int track_out,
                   int track_in, int offset);
};

class BandedEndo {
public:
  explicit BandedEndo(const EndoBuilder& parts);

  const SpaceSpec& space() const { return space_; }
  int band() const { return band_; }
  int core_lo() const { return core_lo_; }
  int core_hi() const { return core_hi_; }
  int period_left() const { return period_left_; }
  int period_right() const { return period_right_; }

  // matrix entry at row (track_out, out_pos), column (track_in, out_pos+offset);
  // zero outside the band or track range
  Scalar entry(int out_pos, int track_out, int track_in, int offset) const;

  // image of a finitely supported vector; support widens by at most the band
  Vec apply(const Vec& x) const;

  // pullback chi∘f of a finitely supported functional (row covector times f)
  Vec apply_functional(const Vec& chi) const;

  bool operator==(const BandedEndo& other) const;

private:
  friend struct EndoBuilder;
  BandedEndo() : space_(FieldSpec(2), 1) {}

  std::size_t block_size() const;
  const Scalar* row_ptr(int out_pos) const;
  std::vector<Scalar> row_block(int out_pos) const;
  void canonicalize();
  void rebuild_band(int new_band);

  SpaceSpec space_;
  int band_ = 0;
  int core_lo_ = 0, core_hi_ = -1;
  int period_left_ = 1, period_right_ = 1;
  std::vector<Scalar> core_, left_, right_;

  friend BandedEndo compose(const BandedEndo&, const BandedEndo&);
  friend BandedEndo dualize(const BandedEndo&);
  friend BandedEndo block_diagonal(const BandedEndo&, const BandedEndo&);
  friend BandedEndo compact_component(const BandedEndo&);
};

BandedEndo identity_endo(const SpaceSpec& space);
BandedEndo zero_endo(const SpaceSpec& space);

// (x_n) -> (x_{n+s}) on every track: band |s|, single diagonal of ones.
BandedEndo uniform_shift(const SpaceSpec& space, int s);

// Exact matrix product f∘g (first apply g, then f).
BandedEndo compose(const BandedEndo& f, const BandedEndo& g);

// f^k for k >= 0.
BandedEndo power(const BandedEndo& f, int k);

// The dual endomorphism under the pairing <x, chi> = sum_n x_(t,n) chi_(t,1-n):
// dual coordinates are reflected through rho(n) = 1 - n, which swaps the
// discrete and linearly compact parts. Involution; contravariant.
BandedEndo dualize(const BandedEndo& f);

// True iff no entry maps a track inside w to a track outside w, i.e. the
// closed span of w's tracks is f-invariant.
bool check_invariant(const BandedEndo& f, const TrackSubspace& w);

// Submatrix on w's tracks / on the complementary tracks. Both require
// check_invariant(f, w).
BandedEndo restrict_to(const BandedEndo& f, const TrackSubspace& w);
BandedEndo quotient(const BandedEndo& f, const TrackSubspace& w);

// Track-disjoint union; restricting to either factor's tracks recovers it.
BandedEndo block_diagonal(const BandedEndo& f1, const BandedEndo& f2);

// Compression onto the linearly compact part: all entries with input or
// output position <= 0 are zeroed.
BandedEndo compact_component(const BandedEndo& f);

// compose(f, g) == id == compose(g, f), entrywise.
bool is_inverse_pair(const BandedEndo& f, const BandedEndo& g);

} // namespace llcent
