#include "llcent/oracle.hpp"

#include <set>
#include <stdexcept>

#include "llcent/entropy_alg.hpp"
#include "llcent/entropy_top.hpp"

namespace llcent {

namespace {

int exact_log(std::uint64_t value, std::uint64_t base) {
  int e = 0;
  std::uint64_t v = value;
  while (v > 1) {
    if (v % base != 0)
      throw std::logic_error("count is not a power of p; linearity violated");
    v /= base;
    ++e;
  }
  if (value == 0) throw std::logic_error("empty solution set");
  return e;
}

} // namespace

int enum_cotraj_codim(const BandedEndo& f, int k, int n, int window_len) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int t = f.space().tracks;
  const FieldSpec field = f.space().field;
  const auto labels = window_labels(t, k, k + window_len - 1);
  const int w = static_cast<int>(labels.size());

  std::uint64_t states = 1;
  for (int i = 0; i < w; ++i) {
    states *= field.p;
    if (states > kOracleCap)
      throw std::invalid_argument("enumeration window exceeds the oracle cap");
  }

  std::vector<Scalar> digits(w, 0);
  std::uint64_t solutions = 0;
  for (std::uint64_t s = 0; s < states; ++s) {
    Vec x;
    for (int i = 0; i < w; ++i)
      if (digits[i] != 0) x.emplace(labels[i], digits[i]);

    bool inside = true;
    Vec y = x;
    for (int j = 1; j < n && inside; ++j) {
      y = f.apply(y);
      for (const auto& [coord, value] : y)
        if (coord.position < k && value != 0) {
          inside = false;
          break;
        }
    }
    if (inside) ++solutions;

    for (int i = 0; i < w; ++i) { // odometer
      if (++digits[i] < field.p) break;
      digits[i] = 0;
    }
  }
  return w - exact_log(solutions, field.p);
}

int enum_trajectory_dim(const BandedEndo& g, int k, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int t = g.space().tracks;
  const int b = g.band();
  const FieldSpec field = g.space().field;
  const auto below = window_labels(t, k - (n - 1) * b, k - 1);

  // projections of g^j e_(tr,m) below k, for generators within reach
  std::vector<std::vector<Scalar>> vectors;
  for (int j = 1; j < n; ++j)
    for (int m = k; m < k + j * b; ++m)
      for (int tr = 1; tr <= t; ++tr) {
        Vec img{{Coord{tr, m}, 1}};
        for (int step = 0; step < j; ++step) img = g.apply(img);
        vectors.push_back(dense_row(img, below));
      }

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    combos *= field.p;
    if (combos > kOracleCap)
      throw std::invalid_argument("generator count exceeds the oracle cap");
  }

  std::set<std::vector<Scalar>> distinct;
  std::vector<Scalar> coeff(vectors.size(), 0);
  for (std::uint64_t s = 0; s < combos; ++s) {
    std::vector<Scalar> sum(below.size(), 0);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t c = 0; c < sum.size(); ++c)
        sum[c] = field.add(sum[c], field.mul(coeff[i], vectors[i][c]));
    }
    distinct.insert(std::move(sum));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (++coeff[i] < field.p) break;
      coeff[i] = 0;
    }
  }
  return exact_log(distinct.size(), field.p);
}

OracleReport cross_validate(const BandedEndo& f, const std::vector<int>& levels,
                            int n_max) {
  OracleReport report;
  const BandedEndo g = dualize(f);
  const int t = f.space().tracks;
  const std::uint64_t p = f.space().field.p;

  auto fits_cap = [&](int exponent) {
    std::uint64_t acc = 1;
    for (int i = 0; i < exponent; ++i) {
      acc *= p;
      if (acc > kOracleCap) return false;
    }
    return true;
  };

  for (int k : levels) {
    for (int n = 1; n <= n_max; ++n) {
      int window_len = (n - 1) * f.band() + 1;
      if (!fits_cap(t * window_len)) {
        ++report.skipped;
      } else {
        int engine = cotraj_codim(f, k, n);
        int oracle = enum_cotraj_codim(f, k, n, window_len);
        ++report.checked;
        if (engine != oracle)
          report.mismatches.push_back({"cotrajectory", k, n, engine, oracle});
      }

      int kp = perp_level(k);
      int gens = 0;
      for (int j = 1; j < n; ++j) gens += t * j * g.band();
      if (!fits_cap(gens)) {
        ++report.skipped;
      } else {
        int engine = trajectory_dim(g, kp, n);
        int oracle = enum_trajectory_dim(g, kp, n);
        ++report.checked;
        if (engine != oracle)
          report.mismatches.push_back({"trajectory", kp, n, engine, oracle});
      }
    }
  }
  return report;
}

} // namespace llcent
