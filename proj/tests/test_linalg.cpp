#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "tgrs/linalg.hpp"
#include "tgrs/poly.hpp"

using namespace tgrs;

namespace {

// Leibniz expansion.
auto det_by_permutations(MatGF const &m) -> GF
{
  auto const      n = static_cast<int>(m.rows());
  auto const     *f = m(0, 0).field();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  GF total = f->zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) { inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]; }
    }
    GF term = f->one();
    for (int i = 0; i < n; ++i) { term *= m(i, perm[static_cast<std::size_t>(i)]); }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

auto elems(FieldRef f, std::vector<std::int64_t> const &xs) -> std::vector<GF>
{
  std::vector<GF> out;
  for (auto x : xs) { out.push_back(f->from_int(x)); }
  return out;
}

} // namespace

TEST_SUITE("linalg")
{
  TEST_CASE("small examples")
  {
    auto const *f7 = Field::get(7);
    auto const  v  = vandermonde(elems(f7, {1, 2, 3}), 3);
    CHECK(det(v).rep() == 2);

    MatGF i2 = MatGF::Identity(2, 2);
    for (Index r = 0; r < 2; ++r) {
      for (Index c = 0; c < 2; ++c) { i2(r, c) = i2(r, c).in(f7); }
    }
    VecGF u(2);
    u << f7->one(), f7->zero();
    CHECK(det_rank_one_update(i2, u, u).rep() == 2);

    MatGF singular(2, 2);
    singular << f7->one(), f7->element(2), f7->element(2), f7->element(4);
    CHECK(det(singular).is_zero());
    CHECK(rank(singular) == 1);
    CHECK_THROWS_AS(solve(singular, u), DomainError);
    CHECK_THROWS_AS(det_rank_one_update(singular, u, u), DomainError);
    CHECK_THROWS_AS(det(MatGF(2, 3)), UsageError);
  }

  TEST_CASE("determinant agrees with the Leibniz expansion")
  {
    std::mt19937_64 rng(4);
    for (auto const *f : {Field::get(7), Field::get(31)}) {
      for (int trial = 0; trial < 150; ++trial) {
        int const n = test::uniform(rng, 1, 5);
        auto      m = test::random_matrix(rng, f, n, n);
        if (trial % 5 == 0 && n > 1) { m.row(n - 1) = m.row(0) * test::random_element(rng, f); }
        CHECK(det(m) == det_by_permutations(m));
        CHECK((det(m).is_zero() == (rank(m) < n)));
      }
    }
  }

  TEST_CASE("rank is transpose invariant and null space is a kernel basis")
  {
    std::mt19937_64 rng(5);
    for (auto const *f : {Field::get(7), Field::get(37), Field::get(3, 2, {1, 0, 1})}) {
      for (int trial = 0; trial < 150; ++trial) {
        int const r = test::uniform(rng, 1, 6);
        int const c = test::uniform(rng, 1, 8);
        MatGF     m = test::random_matrix(rng, f, r, c);
        if (trial % 3 == 0 && r > 1) { m.row(0) = m.row(r - 1) + m.row(r - 1); }
        MatGF const mt = m.transpose();
        CHECK(rank(m) == rank(mt));
        auto const n = null_space(m);
        CHECK(n.rows() == c - rank(m));
        if (n.rows() > 0) {
          MatGF const prod = m * n.transpose();
          CHECK(is_zero_matrix(prod));
          CHECK(rank(n) == n.rows());
        }
      }
    }
  }

  TEST_CASE("solve and inverse")
  {
    std::mt19937_64 rng(6);
    auto const     *f = Field::get(31);
    for (int trial = 0; trial < 100; ++trial) {
      int const n = test::uniform(rng, 1, 6);
      auto      a = test::random_matrix(rng, f, n, n);
      if (det(a).is_zero()) { continue; }
      auto const  b  = test::random_matrix(rng, f, n, 1);
      VecGF const x  = solve(a, b);
      MatGF const ax = a * x;
      CHECK(ax == b);
      MatGF const prod = a * inverse(a);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) { CHECK(prod(i, j) == (i == j ? f->one() : f->zero())); }
      }
    }
  }

  TEST_CASE("Vandermonde solve matches Lagrange coefficients")
  {
    // V w = e_{r+1} is solved by w_j = [x^r] l_j(x), l_j the Lagrange basis.
    std::mt19937_64 rng(7);
    for (auto const *f : {Field::get(31), Field::get(37)}) {
      for (int n = 1; n <= 8; ++n) {
        auto const pts = test::distinct_points(rng, f, n);
        for (int r = 0; r < n; ++r) {
          auto const w = solve_vandermonde(pts, r);
          for (int j = 0; j < n; ++j) {
            std::vector<GF> others;
            GF              denom = f->one();
            for (int i = 0; i < n; ++i) {
              if (i == j) { continue; }
              others.push_back(pts[static_cast<std::size_t>(i)]);
              denom *= pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(i)];
            }
            auto const lj = from_roots(f, others);
            CHECK(w(j) == lj.coeff(static_cast<std::size_t>(r)) / denom);
          }
        }
      }
    }
    auto const *f7 = Field::get(7);
    try {
      solve_vandermonde(elems(f7, {1, 2, 1}), 0);
      FAIL("expected DomainError");
    } catch (DomainError const &e) {
      CHECK(std::string(e.what()).find("points 1 and 3") != std::string::npos);
    }
  }

  TEST_CASE("rank-one determinant identity")
  {
    std::mt19937_64 rng(8);
    auto const     *f = Field::get(37);
    for (int trial = 0; trial < 100; ++trial) {
      int const n = test::uniform(rng, 1, 6);
      auto      a = test::random_matrix(rng, f, n, n);
      if (det(a).is_zero()) { continue; }
      VecGF const u = test::random_matrix(rng, f, n, 1);
      VecGF const v = test::random_matrix(rng, f, n, 1);
      MatGF const b = a + u * v.transpose();
      CHECK(det_rank_one_update(a, u, v) == det(b));
    }
  }

  TEST_CASE("row space helpers")
  {
    std::mt19937_64 rng(9);
    auto const     *f = Field::get(7);
    auto const      m = test::random_matrix(rng, f, 3, 6);
    MatGF           mixed(3, 6);
    mixed.row(0) = m.row(0) + m.row(1);
    mixed.row(1) = m.row(1);
    mixed.row(2) = m.row(2) * f->element(3);
    CHECK(row_spaces_equal(m, mixed));
    CHECK(vstack(m, mixed).rows() == 6);
    auto const sel = select_columns(m, {4, 1});
    CHECK(sel(2, 0) == m(2, 4));
    CHECK(sel(0, 1) == m(0, 1));
  }
}
