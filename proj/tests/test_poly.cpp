#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tgrs/poly.hpp"

using namespace tgrs;

namespace {

auto poly(FieldRef f, std::vector<std::int64_t> const &c) -> Poly
{
  std::vector<GF> xs;
  for (auto x : c) { xs.push_back(f->from_int(x)); }
  return Poly(f, xs);
}

auto random_poly(std::mt19937_64 &rng, FieldRef f, int max_deg) -> Poly
{
  std::vector<GF> c;
  int const       d = test::uniform(rng, -1, max_deg);
  for (int i = 0; i <= d; ++i) { c.push_back(test::random_element(rng, f)); }
  return Poly(f, c);
}

} // namespace

TEST_SUITE("poly")
{
  TEST_CASE("from_roots")
  {
    auto const     *f31 = Field::get(31);
    std::vector<GF> r31{f31->element(30), f31->element(2)};
    CHECK(from_roots(f31, r31) == poly(f31, {29, 30, 1}));

    auto const     *f7 = Field::get(7);
    std::vector<GF> r7{f7->element(1), f7->element(2), f7->element(3)};
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CHECK(from_roots(f7, r7) == poly(f7, {1, 4, 1, 1}));
    CHECK(from_roots(f7, std::vector<GF>{}) == poly(f7, {1}));
  }

  TEST_CASE("evaluation")
  {
    auto const *f37 = Field::get(37);
    auto const  f   = poly(f37, {0, 1, 0, 22, 24});
    CHECK(f(f37->one()).rep() == 10);
    CHECK(Poly(f37)(f37->element(5)).is_zero());
  }

  TEST_CASE("degree and normalization")
  {
    auto const *f7 = Field::get(7);
    CHECK(poly(f7, {1, 2, 0, 0}).degree() == 1);
    CHECK_FALSE(poly(f7, {0, 7}).degree().has_value());
    CHECK(poly(f7, {3, 0, 1}).is_monic());
    CHECK(Poly::monomial(f7, 3, f7->element(2)).coeff(3).rep() == 2);
    CHECK(poly(f7, {1, 1}).coeff(9).is_zero());
  }

  TEST_CASE("divmod identity and degree bound")
  {
    std::mt19937_64 rng(2);
    for (auto const *f : {Field::get(7), Field::get(31), Field::get(2, 4, {1, 1, 0, 0, 1})}) {
      for (int trial = 0; trial < 200; ++trial) {
        auto const num = random_poly(rng, f, 12);
        auto       den = random_poly(rng, f, 6);
        if (den.is_zero()) { den = poly(f, {1}); }
        auto const [quo, rem] = divmod(num, den);
        CHECK(quo * den + rem == num);
        CHECK((rem.is_zero() || *rem.degree() < *den.degree()));
      }
    }
    auto const *f7 = Field::get(7);
    CHECK_THROWS_AS(divmod(poly(f7, {1, 1}), Poly(f7)), DivisionByZero);
  }

  TEST_CASE("roots vanish and products agree with evaluation")
  {
    std::mt19937_64 rng(3);
    auto const     *f = Field::get(37);
    for (int trial = 0; trial < 50; ++trial) {
      auto const pts = test::distinct_points(rng, f, test::uniform(rng, 1, 8));
      auto const g   = from_roots(f, pts);
      CHECK(g.degree() == pts.size());
      for (auto const &x : pts) { CHECK(g(x).is_zero()); }
      auto const a = random_poly(rng, f, 5);
      auto const b = random_poly(rng, f, 5);
      auto const x = test::random_element(rng, f);
      CHECK((a * b)(x) == a(x) * b(x));
      CHECK((a + b)(x) == a(x) + b(x));
      CHECK((a - b)(x) == a(x) - b(x));
    }
  }
}
