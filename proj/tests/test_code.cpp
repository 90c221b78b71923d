#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "tgrs/code.hpp"
#include "tgrs/poly.hpp"

using namespace tgrs;

namespace {

auto elems(FieldRef f, std::vector<std::int64_t> const &xs) -> std::vector<GF>
{
  std::vector<GF> out;
  for (auto x : xs) { out.push_back(f->from_int(x)); }
  return out;
}

// Row i of G from the polynomial basis: x^i, with row h replaced by
// x^h + sum_t eta_t x^{k+t}; column j scaled by v_j.
auto generator_by_evaluation(TgrsSpec const &s) -> MatGF
{
  auto const *f = s.field();
  MatGF       g(s.k(), s.n());
  for (int i = 0; i < s.k(); ++i) {
    Poly row = Poly::monomial(f, static_cast<std::size_t>(i), f->one());
    if (i == s.h()) {
      for (int t = 0; t <= s.l(); ++t) {
        row = row + Poly::monomial(f, static_cast<std::size_t>(s.k() + t), s.eta()[static_cast<std::size_t>(t)]);
      }
    }
    for (int j = 0; j < s.n(); ++j) {
      g(i, j) = s.v()[static_cast<std::size_t>(j)] * row(s.alpha()[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

auto q37_spec() -> TgrsSpec
{
  auto const *f = Field::get(37);
  return TgrsSpec(f, 9, 3, 1, 1, elems(f, {1, 16, 26, 12, 33, 10, 34, 7, 9}), elems(f, {21, 30, 1, 1, -1, 1, 1, 1, -1}),
                  elems(f, {22, 24}));
}

auto message_of(ConstructionError const &e) -> std::string { return e.what(); }

} // namespace

TEST_SUITE("code")
{
  TEST_CASE("generator matrix matches polynomial evaluation")
  {
    std::mt19937_64 rng(20);
    for (auto const *f : test::test_fields()) {
      for (int trial = 0; trial < 40; ++trial) {
        auto const spec = test::random_spec(rng, f);
        CHECK(generator_matrix(spec) == generator_by_evaluation(spec));
      }
    }
  }

  TEST_CASE("parity-check matrix annihilates the code")
  {
    std::mt19937_64 rng(21);
    for (auto const *f : test::test_fields()) {
      for (int trial = 0; trial < 60; ++trial) {
        auto const  spec = test::random_spec(rng, f);
        auto const  g    = generator_matrix(spec);
        auto const  h    = parity_check_matrix(spec);
        MatGF const gh   = g * h.transpose();
        CAPTURE(spec.n());
        CAPTURE(spec.k());
        CHECK(h.rows() == spec.n() - spec.k());
        CHECK(is_zero_matrix(gh));
        CHECK(rank(h) == spec.n() - spec.k());
        if (rank(g) == spec.k()) { CHECK(row_spaces_equal(h, null_space(g))); }
      }
    }
  }

  TEST_CASE("encoding is the message times G")
  {
    std::mt19937_64 rng(22);
    auto const      spec = q37_spec();
    auto const      g    = generator_matrix(spec);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<GF> msg;
      VecGF           m(spec.k());
      for (int i = 0; i < spec.k(); ++i) {
        msg.push_back(test::random_element(rng, spec.field()));
        m(i) = msg.back();
      }
      auto const  cw   = encode(spec, msg);
      MatGF const prod = m.transpose() * g;
      for (int j = 0; j < spec.n(); ++j) { CHECK(cw[static_cast<std::size_t>(j)] == prod(0, j)); }
    }
    CHECK_THROWS_AS(encode(spec, elems(spec.field(), {1, 2})), UsageError);
  }

  TEST_CASE("general twist form reproduces the single-hook code")
  {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      auto const spec = test::random_spec(rng, Field::get(31));
      auto const gen  = GeneralTwistSpec::from(spec);
      CHECK(generator_matrix(gen) == generator_matrix(spec));
      std::vector<GF> msg;
      for (int i = 0; i < spec.k(); ++i) { msg.push_back(test::random_element(rng, spec.field())); }
      CHECK(encode_general(gen, msg) == encode(spec, msg));
    }
  }

  TEST_CASE("validation")
  {
    auto const *f     = Field::get(37);
    auto const  alpha = elems(f, {1, 16, 26, 12, 33, 10, 34, 7, 9});
    auto const  v     = elems(f, {21, 30, 1, 1, -1, 1, 1, 1, -1});

    auto dup = alpha;
    dup[6]   = dup[1];
    try {
      TgrsSpec(f, 9, 3, 1, 1, dup, v, elems(f, {22, 24}));
      FAIL("expected ConstructionError");
    } catch (ConstructionError const &e) {
      CHECK(message_of(e).find("alpha entries 2 and 7") != std::string::npos);
    }
    try {
      TgrsSpec(f, 9, 3, 6, 1, alpha, v, elems(f, {1, 1, 1, 1, 1, 1, 1}));
      FAIL("expected ConstructionError");
    } catch (ConstructionError const &e) {
      CHECK(message_of(e).find("L = {0..l} subset of {0,...,n-k-1}") != std::string::npos);
    }
    CHECK_THROWS_AS(TgrsSpec(f, 9, 3, 1, 0, alpha, v, elems(f, {1, 1})), ConstructionError);
    CHECK_THROWS_AS(TgrsSpec(f, 9, 3, 1, 3, alpha, v, elems(f, {1, 1})), ConstructionError);
    CHECK_THROWS_AS(TgrsSpec(f, 9, 1, 1, 1, alpha, v, elems(f, {1, 1})), ConstructionError);
    CHECK_THROWS_AS(TgrsSpec(f, 9, 3, 1, 1, alpha, v, elems(f, {1})), ConstructionError);
    auto zero_v = v;
    zero_v[4]   = f->zero();
    CHECK_THROWS_AS(TgrsSpec(f, 9, 3, 1, 1, alpha, zero_v, elems(f, {1, 1})), ConstructionError);

    auto const spec = q37_spec();
    CHECK_FALSE(spec.boundary_hook());
    CHECK(spec.with_eta(elems(f, {0, 1})).eta()[1].is_one());
  }
}
