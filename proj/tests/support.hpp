#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tgrs/classify.hpp"
#include "tgrs/code.hpp"
#include "tgrs/lcdgen.hpp"
#include "tgrs/poly.hpp"

namespace tgrs::test {

inline auto random_element(std::mt19937_64 &rng, FieldRef f) -> GF
{
  return f->element(static_cast<Rep>(std::uniform_int_distribution<std::uint64_t>(0, f->order() - 1)(rng)));
}

inline auto random_nonzero(std::mt19937_64 &rng, FieldRef f) -> GF
{
  return f->element(static_cast<Rep>(std::uniform_int_distribution<std::uint64_t>(1, f->order() - 1)(rng)));
}

inline auto uniform(std::mt19937_64 &rng, int lo, int hi) -> int
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline auto distinct_points(std::mt19937_64 &rng, FieldRef f, int n) -> std::vector<GF>
{
  auto all = f->elements();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(n));
  return all;
}

inline auto random_matrix(std::mt19937_64 &rng, FieldRef f, int rows, int cols) -> MatGF
{
  MatGF m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) { m(i, j) = random_element(rng, f); }
  }
  return m;
}

struct SpecShape
{
  int n_min = 3;
  int n_max = 14;
  // Upper bound on C(n, k); 0 for none.
  std::uint64_t max_subsets = 0;
};

// A valid TgrsSpec with random n, k, l, h, points, multipliers and twist.
inline auto random_spec(std::mt19937_64 &rng, FieldRef f, SpecShape shape = {}) -> TgrsSpec
{
  int const n_hi = std::min<int>(shape.n_max, static_cast<int>(f->order()));
  for (;;) {
    int const n = uniform(rng, shape.n_min, n_hi);
    int const k = uniform(rng, 2, n - 1);
    if (shape.max_subsets && binomial(n, k) > shape.max_subsets) { continue; }
    int const       l = uniform(rng, 0, n - k - 1);
    int const       h = uniform(rng, 1, k - 1);
    std::vector<GF> v;
    std::vector<GF> eta;
    for (int i = 0; i < n; ++i) { v.push_back(random_nonzero(rng, f)); }
    for (int t = 0; t <= l; ++t) { eta.push_back(random_element(rng, f)); }
    return TgrsSpec(f, n, k, l, h, distinct_points(rng, f, n), std::move(v), std::move(eta));
  }
}

inline auto test_fields() -> std::vector<FieldRef> { return {Field::get(7), Field::get(31), Field::get(37)}; }

// Codewords by enumeration of all messages: the smallest nonzero weight.
inline auto distance_by_enumeration(MatGF const &g) -> int
{
  auto const *f = g(0, 0).field();
  auto const  k = static_cast<int>(g.rows());
  auto const  n = static_cast<int>(g.cols());
  auto const  q = f->order();
  int         best = n + 1;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
  for (;;) {
    int i = 0;
    while (i < k && ++digits[static_cast<std::size_t>(i)] == q) { digits[static_cast<std::size_t>(i++)] = 0; }
    if (i == k) { break; }
    int w = 0;
    for (int c = 0; c < n; ++c) {
      GF acc = f->zero();
      for (int r = 0; r < k; ++r) {
        acc += f->element(static_cast<Rep>(digits[static_cast<std::size_t>(r)])) * g(r, c);
      }
      w += acc.is_zero() ? 0 : 1;
    }
    if (w > 0) { best = std::min(best, w); }
  }
  return best;
}

} // namespace tgrs::test
