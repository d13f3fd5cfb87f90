#include "llcent/field.hpp"

#include <algorithm>

namespace llcent {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t modulus) : p(modulus) {
  if (!is_prime(modulus))
    throw std::invalid_argument("field modulus " + std::to_string(modulus) +
                                " is not prime");
  if (modulus > 46337) // mul must fit in uint64 comfortably; desk scale anyway
    throw std::invalid_argument("field modulus too large");
}

Scalar FieldSpec::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

namespace detail {

RankAccumulator::RankAccumulator(FieldSpec field, int cols)
    : field_(field), cols_(cols), words_((cols + 63) / 64) {}

bool RankAccumulator::absorb(std::span<const Scalar> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("row width mismatch");
  return field_.p == 2 ? absorb_gf2(row) : absorb_mod(row);
}

// Rows are kept forward-reduced only (echelon, not reduced echelon): the
// retiring of entries above pivots is deferred to basis(), which rank-only
// callers never pay for.

bool RankAccumulator::absorb_gf2(std::span<const Scalar> row) {
  std::vector<std::uint64_t> bits(words_, 0);
  for (int c = 0; c < cols_; ++c)
    if (row[c] & 1u) bits[c >> 6] |= std::uint64_t(1) << (c & 63);

  auto first_bit = [&](const std::vector<std::uint64_t>& b) -> int {
    for (int w = 0; w < words_; ++w)
      if (b[w]) return (w << 6) + __builtin_ctzll(b[w]);
    return -1;
  };
  auto get = [&](const std::vector<std::uint64_t>& b, int c) {
    return (b[c >> 6] >> (c & 63)) & 1u;
  };

  for (const auto& r : gf2_rows_)
    if (get(bits, r.pivot))
      for (int w = r.pivot >> 6; w < words_; ++w) bits[w] ^= r.bits[w];

  int pivot = first_bit(bits);
  if (pivot < 0) return false;

  auto pos = std::lower_bound(
      gf2_rows_.begin(), gf2_rows_.end(), pivot,
      [](const Gf2Row& r, int piv) { return r.pivot < piv; });
  gf2_rows_.insert(pos, Gf2Row{std::move(bits), pivot});
  ++rank_;
  return true;
}

bool RankAccumulator::absorb_mod(std::span<const Scalar> row) {
  const std::uint64_t p = field_.p;
  // deferred reduction: entries stay unreduced in 64 bits through the whole
  // elimination pass (increments are < 2^32 each, rank <= cols <= 2^20)
  std::vector<std::uint64_t> buf(row.begin(), row.end());

  for (const auto& r : mod_rows_) {
    Scalar c = static_cast<Scalar>(buf[r.pivot] % p);
    if (c == 0) continue;
    const std::uint64_t mult = p - c; // adding mult*row == subtracting c*row
    const Scalar* rv = r.vals.data();
    for (int j = r.pivot; j < cols_; ++j) buf[j] += mult * rv[j];
  }

  int pivot = -1;
  for (int j = 0; j < cols_; ++j)
    if (buf[j] % p != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;

  std::vector<Scalar> vals(cols_, 0);
  Scalar invp = field_.inv(static_cast<Scalar>(buf[pivot] % p));
  for (int j = pivot; j < cols_; ++j)
    vals[j] = field_.mul(static_cast<Scalar>(buf[j] % p), invp);

  auto pos = std::lower_bound(
      mod_rows_.begin(), mod_rows_.end(), pivot,
      [](const ModRow& r, int piv) { return r.pivot < piv; });
  mod_rows_.insert(pos, ModRow{std::move(vals), pivot});
  ++rank_;
  return true;
}

std::vector<std::vector<Scalar>> RankAccumulator::basis() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rank_);
  if (field_.p == 2) {
    for (const auto& r : gf2_rows_) {
      std::vector<Scalar> row(cols_, 0);
      for (int c = 0; c < cols_; ++c)
        row[c] = (r.bits[c >> 6] >> (c & 63)) & 1u;
      out.push_back(std::move(row));
    }
  } else {
    for (const auto& r : mod_rows_) out.push_back(r.vals);
  }
  // clear above the pivots, bottom-up, to reach the reduced echelon form
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    int pivot = 0;
    while (pivot < cols_ && out[i][pivot] == 0) ++pivot;
    for (int upper = 0; upper < i; ++upper) {
      Scalar c = out[upper][pivot];
      if (c == 0) continue;
      for (int j = pivot; j < cols_; ++j)
        out[upper][j] = field_.sub(out[upper][j], field_.mul(c, out[i][j]));
    }
  }
  return out;
}

std::vector<std::vector<Scalar>> constrain_rows(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows,
    int constraint_cols) {
  const int n = static_cast<int>(rows.size());
  const int total = n == 0 ? constraint_cols
                           : static_cast<int>(rows[0].size());
  const int payload = total - constraint_cols;
  if (payload < 0) throw std::invalid_argument("constraint_cols too large");

  // eliminate with pivots restricted to the constraint columns; rows whose
  // constraint part cancels completely carry a payload in the target space
  struct Work {
    std::vector<Scalar> row;
    int pivot;
  };
  std::vector<Work> pivots;
  std::vector<std::vector<Scalar>> out;

  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != total)
      throw std::invalid_argument("ragged rows");
    std::vector<Scalar> row = rows[i];

    for (const auto& pv : pivots) {
      Scalar f = row[pv.pivot];
      if (f == 0) continue;
      for (int j = 0; j < total; ++j)
        row[j] = field.sub(row[j], field.mul(f, pv.row[j]));
    }

    int pivot = -1;
    for (int j = 0; j < constraint_cols; ++j)
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) {
      out.emplace_back(row.begin() + constraint_cols, row.end());
      continue;
    }
    Scalar invp = field.inv(row[pivot]);
    for (int j = 0; j < total; ++j) row[j] = field.mul(row[j], invp);
    pivots.push_back(Work{std::move(row), pivot});
  }

  RankAccumulator acc(field, payload);
  for (const auto& r : out) acc.absorb(r);
  return acc.basis();
}

std::vector<std::vector<Scalar>> left_kernel(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int c = n == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<std::vector<Scalar>> augmented(rows.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    augmented[i].assign(c + n, 0);
    std::copy(rows[i].begin(), rows[i].end(), augmented[i].begin());
    augmented[i][c + i] = 1;
  }
  return constrain_rows(field, augmented, c);
}

std::vector<std::vector<Scalar>> right_kernel(
    FieldSpec field, const std::vector<std::vector<Scalar>>& rows, int cols) {
  // transpose, then the left kernel of the transpose is the right kernel
  std::vector<std::vector<Scalar>> t(cols, std::vector<Scalar>(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  }
  return left_kernel(field, t);
}

} // namespace detail

} // namespace llcent
