// Exact arithmetic in the prime field F_p and row-echelon machinery.
//
// Everything downstream reduces to ranks of small matrices over F_p, so this
// file carries the two elimination backends: bit-packed rows for p = 2 and
// residue rows for odd p. All values are immutable after construction and all
// operations are pure.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace llcent {

using Scalar = std::uint32_t; // residue in [0, p)

// The discrete finite prime field F_p. Primality is checked at construction;
// prime powers and composites are rejected.
struct FieldSpec {
  std::uint32_t p;

  explicit FieldSpec(std::uint32_t modulus);

  bool operator==(const FieldSpec&) const = default;

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p ? s - p : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t(a) * b) % p);
  }
  Scalar inv(Scalar a) const; // a != 0
  Scalar reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Scalar>(r < 0 ? r + p : r);
  }
};

bool is_prime(std::uint32_t n);

namespace detail {

// Incrementally maintained reduced row echelon form. absorb() reports whether
// the row extended the span; basis() returns the canonical RREF rows sorted
// by pivot column.
class RankAccumulator {
public:
  RankAccumulator(FieldSpec field, int cols);

  bool absorb(std::span<const Scalar> row);
  int rank() const { return rank_; }
  int cols() const { return cols_; }
  std::vector<std::vector<Scalar>> basis() const;

private:
  struct Gf2Row {
    std::vector<std::uint64_t> bits;
    int pivot;
  };
  struct ModRow {
    std::vector<Scalar> vals;
    int pivot;
  };

  bool absorb_gf2(std::span<const Scalar> row);
  bool absorb_mod(std::span<const Scalar> row);

  FieldSpec field_;
  int cols_ = 0;
  int rank_ = 0;
  int words_ = 0;
  std::vector<Gf2Row> gf2_rows_;
  std::vector<ModRow> mod_rows_;
};

// Rows are split [constraint | payload] with constraint_cols leading columns.
// Returns payload parts of a basis of {v in rowspace : constraint(v) = 0}.
std::vector<std::vector<Scalar>> constrain_rows(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows,
    int constraint_cols);

// Basis of the left kernel {y : y * rows = 0}; each returned vector has
// length rows.size(). Canonical (RREF over the coefficient columns).
std::vector<std::vector<Scalar>> left_kernel(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

// Basis of the right kernel {x : rows * x = 0} of a rows.size() x cols matrix.
std::vector<std::vector<Scalar>> right_kernel(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows, int cols);

} // namespace detail

} // namespace llcent
