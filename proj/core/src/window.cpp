#include "llcent/window.hpp"

#include <algorithm>

namespace llcent {

WindowMatrix::WindowMatrix(FieldSpec field, std::vector<Coord> labels)
    : field_(field), labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i)
    if (!(labels_[i - 1] < labels_[i]))
      throw std::invalid_argument("column labels must be strictly increasing");
}

WindowMatrix WindowMatrix::from_rows(FieldSpec field, std::vector<Coord> labels,
                                     std::vector<std::vector<Scalar>> rows) {
  WindowMatrix m(field, std::move(labels));
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

WindowMatrix WindowMatrix::full(FieldSpec field, std::vector<Coord> labels) {
  WindowMatrix m(field, std::move(labels));
  for (int i = 0; i < m.cols(); ++i) {
    std::vector<Scalar> row(m.cols(), 0);
    row[i] = 1;
    m.append_row(std::move(row));
  }
  return m;
}

void WindowMatrix::append_row(std::vector<Scalar> row) {
  if (row.size() != labels_.size())
    throw std::invalid_argument("row width does not match labels");
  for (Scalar v : row)
    if (v >= field_.p) throw std::invalid_argument("entry not reduced mod p");
  rows_.push_back(std::move(row));
}

Vec WindowMatrix::row_vec(int r) const {
  Vec v;
  for (int c = 0; c < cols(); ++c)
    if (rows_[r][c] != 0) v.emplace(labels_[c], rows_[r][c]);
  return v;
}

int rank(const WindowMatrix& m) {
  detail::RankAccumulator acc(m.field(), m.cols());
  for (int r = 0; r < m.rows(); ++r) acc.absorb(m.row(r));
  return acc.rank();
}

WindowMatrix rref(const WindowMatrix& m) {
  detail::RankAccumulator acc(m.field(), m.cols());
  for (int r = 0; r < m.rows(); ++r) acc.absorb(m.row(r));
  return WindowMatrix::from_rows(m.field(), m.col_labels(), acc.basis());
}

static void require_aligned(const WindowMatrix& a, const WindowMatrix& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("field mismatch between window matrices");
  if (a.col_labels() != b.col_labels())
    throw std::invalid_argument("column labels are not aligned");
}

WindowMatrix row_space_sum(const WindowMatrix& a, const WindowMatrix& b) {
  require_aligned(a, b);
  detail::RankAccumulator acc(a.field(), a.cols());
  for (int r = 0; r < a.rows(); ++r) acc.absorb(a.row(r));
  for (int r = 0; r < b.rows(); ++r) acc.absorb(b.row(r));
  return WindowMatrix::from_rows(a.field(), a.col_labels(), acc.basis());
}

WindowMatrix row_space_intersection(const WindowMatrix& a,
                                    const WindowMatrix& b) {
  require_aligned(a, b);
  const FieldSpec field = a.field();

  // stack [a; b]; a left-kernel vector (x, y) has x·a = -y·b, an element of
  // the intersection
  std::vector<std::vector<Scalar>> stacked;
  stacked.reserve(a.rows() + b.rows());
  for (int r = 0; r < a.rows(); ++r) stacked.push_back(a.row(r));
  for (int r = 0; r < b.rows(); ++r) stacked.push_back(b.row(r));

  auto kernel = detail::left_kernel(field, stacked);

  detail::RankAccumulator acc(field, a.cols());
  for (const auto& coeff : kernel) {
    std::vector<Scalar> vec(a.cols(), 0);
    for (int r = 0; r < a.rows(); ++r) {
      if (coeff[r] == 0) continue;
      for (int c = 0; c < a.cols(); ++c)
        vec[c] = field.add(vec[c], field.mul(coeff[r], a.at(r, c)));
    }
    acc.absorb(vec);
  }
  return WindowMatrix::from_rows(field, a.col_labels(), acc.basis());
}

int solve_constraints(const WindowMatrix& funcs) { return rank(funcs); }

WindowMatrix aligned_to(const WindowMatrix& m, std::vector<Coord> labels) {
  WindowMatrix out(m.field(), std::move(labels));
  const auto& target = out.col_labels();
  std::vector<int> where(m.cols(), -1);
  for (int c = 0; c < m.cols(); ++c) {
    auto it = std::lower_bound(target.begin(), target.end(), m.col_labels()[c]);
    if (it == target.end() || *it != m.col_labels()[c])
      throw std::invalid_argument("alignment error: label missing from target");
    where[c] = static_cast<int>(it - target.begin());
  }
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row(target.size(), 0);
    for (int c = 0; c < m.cols(); ++c) row[where[c]] = m.at(r, c);
    out.append_row(std::move(row));
  }
  return out;
}

} // namespace llcent
