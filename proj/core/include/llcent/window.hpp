// Finite-window subspace algebra.
//
// A WindowMatrix holds the image of a subspace in a finite coordinate window:
// its rows span the window part, and every dimension count in the engine is a
// rank of one of these. Rows are kept in canonical reduced row echelon form by
// rref(), so equality of row spaces is plain entry comparison.

#pragma once

#include <vector>

#include "llcent/space.hpp"

namespace llcent {

class WindowMatrix {
public:
  WindowMatrix(FieldSpec field, std::vector<Coord> labels);

  static WindowMatrix from_rows(FieldSpec field, std::vector<Coord> labels,
                                std::vector<std::vector<Scalar>> rows);
  // one row per label: the full window space
  static WindowMatrix full(FieldSpec field, std::vector<Coord> labels);

  void append_row(std::vector<Scalar> row);
  void append_row(const Vec& v) { append_row(dense_row(v, labels_)); }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return static_cast<int>(labels_.size()); }
  Scalar at(int r, int c) const { return rows_[r][c]; }
  const std::vector<Scalar>& row(int r) const { return rows_[r]; }
  const std::vector<Coord>& col_labels() const { return labels_; }
  const FieldSpec& field() const { return field_; }

  Vec row_vec(int r) const;

  bool operator==(const WindowMatrix&) const = default;

private:
  FieldSpec field_;
  std::vector<Coord> labels_;
  std::vector<std::vector<Scalar>> rows_;
};

// F_p-rank; the input is not mutated.
int rank(const WindowMatrix& m);

// Canonical reduced row echelon basis of the row space (zero rows dropped,
// rows ordered by pivot column).
WindowMatrix rref(const WindowMatrix& m);

// RREF basis of rowspace(a) + rowspace(b). Labels must already agree.
WindowMatrix row_space_sum(const WindowMatrix& a, const WindowMatrix& b);

// RREF basis of rowspace(a) ∩ rowspace(b), by the kernel method: solutions of
// x·a = y·b give the common vectors.
WindowMatrix row_space_intersection(const WindowMatrix& a,
                                    const WindowMatrix& b);

// Rank of a stack of constraint functionals, i.e. the codimension the
// constraints cut out of the ambient window.
int solve_constraints(const WindowMatrix& funcs);

// Reindex m onto a superset label list, padding zero columns.
WindowMatrix aligned_to(const WindowMatrix& m, std::vector<Coord> labels);

} // namespace llcent
