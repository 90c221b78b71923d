#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "tgrs/io.hpp"

using namespace tgrs;
using io::json;

namespace {

auto error_of(auto &&fn) -> std::string
{
  try {
    fn();
  } catch (std::exception const &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_SUITE("io")
{
  TEST_CASE("elements and fields")
  {
    auto const *f37 = Field::get(37);
    CHECK(io::element_from_json(json(-1), f37).rep() == 36);
    CHECK(io::element_from_json(json(74), f37).is_zero());
    CHECK(io::to_json(f37->element(5), f37) == json(5));
    CHECK(io::field_from_json(json::parse(R"({"p": 37})")) == f37);

    auto const *f9 = io::field_from_json(json::parse(R"({"p": 3, "m": 2, "modulus": [1, 0, 1]})"));
    CHECK(f9->order() == 9);
    auto const x = io::element_from_json(json::parse("[2, 1]"), f9);
    CHECK(io::to_json(x, f9) == json::parse("[2, 1]"));
    CHECK(io::to_json(f9) == json::parse(R"({"p": 3, "m": 2, "modulus": [1, 0, 1]})"));

    CHECK(error_of([] { io::field_from_json(json::parse(R"({"m": 2})")); }).find("missing field 'p'") !=
          std::string::npos);
    CHECK(error_of([] { io::field_from_json(json::parse(R"({"p": 3, "m": 2})")); }).find("modulus") !=
          std::string::npos);
    CHECK(error_of([&] { io::element_from_json(json("7"), f37, "alpha[3]"); }).find("alpha[3]") != std::string::npos);
  }

  TEST_CASE("parse errors carry line and column")
  {
    auto const msg = error_of([] { io::parse("{\n  \"n\": 9,\n  \"k\" 3\n}", "spec.json"); });
    CHECK(msg.rfind("spec.json:3:", 0) == 0);
    CHECK_THROWS_AS(io::parse("[1, 2", "x"), io::InputError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/spec.json"), io::InputError);
  }

  TEST_CASE("matrices and polynomials")
  {
    auto const *f7 = Field::get(7);
    auto const  m  = io::matrix_from_json(json::parse("[[1, -1], [2, 10]]"), f7);
    CHECK(m(0, 1).rep() == 6);
    CHECK(m(1, 1).rep() == 3);
    CHECK(io::to_json(m, f7) == json::parse("[[1, 6], [2, 3]]"));
    CHECK(error_of([&] { io::matrix_from_json(json::parse("[[1, 2], [3]]"), f7); }).find("ragged") !=
          std::string::npos);
    auto const p = io::poly_from_json(json::parse("[1, 0, 3, 0]"), f7);
    CHECK(p.degree() == 2);
    CHECK(io::to_json(p) == json::parse("[1, 0, 3]"));
    CHECK(io::to_text(m, f7) == "1 6\n2 3\n");
  }

  TEST_CASE("spec round trip")
  {
    std::mt19937_64 rng(50);
    for (auto const *f : test::test_fields()) {
      for (int trial = 0; trial < 20; ++trial) {
        auto const spec = test::random_spec(rng, f);
        auto const back = io::spec_from_json(io::to_json(spec));
        CHECK(generator_matrix(back) == generator_matrix(spec));
        CHECK(io::to_json(back) == io::to_json(spec));
      }
    }
    auto bad = json::parse(R"({"field": {"p": 7}, "n": 4, "k": 2, "l": 0, "h": 1,
                               "alpha": [1, 2, 3, 4], "v": [1, 1, 1, 1]})");
    CHECK(error_of([&] { io::spec_from_json(bad); }).find("missing field 'eta'") != std::string::npos);
    bad["eta"] = json::parse("[1.5]");
    CHECK(error_of([&] { io::spec_from_json(bad); }).find("eta[0]") != std::string::npos);
  }

  TEST_CASE("reports round-trip byte for byte")
  {
    std::mt19937_64 rng(51);
    int             with_witness = 0;
    for (auto const *f : test::test_fields()) {
      for (int trial = 0; trial < 15; ++trial) {
        auto const spec   = test::random_spec(rng, f, {3, 9, 0});
        if (rank(generator_matrix(spec)) < spec.k()) { continue; }
        auto const report = classify(spec);
        auto const first  = io::to_json(report).dump(2);
        auto const parsed = io::report_from_json(io::parse(first));
        CHECK(parsed == report);
        CHECK(io::to_json(parsed).dump(2) == first);
        with_witness += report.mds_witness.has_value();
      }
    }
    CHECK(with_witness > 0);
  }

  TEST_CASE("construction params")
  {
    auto const j = json::parse(R"({"field": {"p": 31}, "n": 10, "h": 1, "l": 2, "m_gap": 2, "lambda": 1,
      "eta": [28, 6, 0], "v_head": [22, 15], "v_tail_signs": [-1, 1, 1, 1, 1, -1, -1, -1]})");
    auto const p = io::params_from_json(j);
    REQUIRE(std::holds_alternative<Class2Params>(p));
    CHECK(std::get<Class2Params>(p).k() == 3);
    CHECK(io::params_from_json(io::to_json(p)).index() == 1);

    auto wrong_k = j;
    wrong_k["k"] = 4;
    CHECK(error_of([&] { io::params_from_json(wrong_k); }).find("inconsistent") != std::string::npos);

    auto c1 = j;
    c1.erase("m_gap");
    c1["k"] = 3;
    auto const p1 = io::params_from_json(c1);
    REQUIRE(std::holds_alternative<Class1Params>(p1));
    CHECK(io::to_json(p1)["k"] == 3);

    auto bad_sign            = j;
    bad_sign["v_tail_signs"] = json::parse("[2, 1, 1, 1, 1, 1, 1, 1]");
    CHECK(error_of([&] { io::params_from_json(bad_sign); }).find("v_tail_signs[0]") != std::string::npos);

    auto const rec = io::to_json(build(p).record);
    REQUIRE(rec.is_array());
    CHECK(rec[0].contains("condition"));
    CHECK(rec[0]["holds"].is_boolean());
    CHECK(rec[0].contains("evidence"));
  }
}
