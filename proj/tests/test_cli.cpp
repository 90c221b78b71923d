#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "tgrs/cli.hpp"

using namespace tgrs;

namespace {

struct Run
{
  int         code = -1;
  std::string out;
  std::string err;
};

auto run(std::vector<std::string> args, std::string const &stdin_text = "") -> Run
{
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Run                r;
  r.code = run_cli(std::move(args), in, out, err);
  r.out  = out.str();
  r.err  = err.str();
  return r;
}

auto data(std::string const &name) -> std::string { return std::string(TGRS_TEST_DATA_DIR) + "/" + name; }

auto contains(std::string const &s, std::string const &needle) -> bool { return s.find(needle) != std::string::npos; }

} // namespace

TEST_SUITE("cli")
{
  TEST_CASE("check")
  {
    auto const r = run({"check", "--input", data("spec_q37_n9.json")});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "[9,3,7]"));
    CHECK(contains(r.out, "LCD            yes"));
    CHECK(contains(r.out, "MDS            yes"));
    CHECK(contains(r.out, "21 30  1  1 36  1  1  1 36"));

    auto const j = run({"check", "--output", "json", "--input", data("spec_q37_n9.json")});
    CHECK(j.code == exit_ok);
    auto const doc = nlohmann::json::parse(j.out);
    CHECK(doc["report"]["parameters"] == "[9,3,7]");
    CHECK(doc["report"]["lcd"] == true);
    CHECK(doc["report"]["mds"] == true);
    CHECK(doc["parity_check_matrix"].size() == 6);
  }

  TEST_CASE("check reads stdin")
  {
    std::string const spec = R"({"field": {"p": 7}, "n": 6, "k": 2, "l": 0, "h": 1,
      "alpha": [1, 2, 3, 4, 5, 6], "v": [1, 1, 1, 1, 1, 1], "eta": [0]})";
    auto const r = run({"check"}, spec);
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "[6,2,5]"));
  }

  TEST_CASE("input errors exit 2")
  {
    auto const dup = run({"check", "--input", data("spec_duplicate_alpha.json")});
    CHECK(dup.code == exit_input);
    CHECK(contains(dup.err, "alpha entries 2 and 7"));

    auto const big_l = run({"check", "--input", data("spec_l_too_large.json")});
    CHECK(big_l.code == exit_input);
    CHECK(contains(big_l.err, "{0,...,n-k-1}"));

    auto const bad = run({"check", "--input", data("spec_malformed.json")});
    CHECK(bad.code == exit_input);
    CHECK(contains(bad.err, "spec_malformed.json:4:"));

    CHECK(run({"check", "--input", data("missing.json")}).code == exit_input);
    CHECK(run({"frobnicate"}).code == exit_input);
    CHECK(run({}).code == exit_input);
    CHECK(run({"check", "--output", "yaml"}).code == exit_input);
    auto const cap = run({"check", "--distance-cap", "30", "--input", data("spec_q37_n9.json")});
    CHECK(cap.code == exit_input);
    CHECK(contains(cap.err, "--unsafe-cap"));
    CHECK(run({"check", "--distance-cap", "30", "--unsafe-cap", "--input", data("spec_q37_n9.json")}).code == exit_ok);
  }

  TEST_CASE("build")
  {
    auto const r = run({"build", "--input", data("spec_q37_n9.json")});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "G_h ="));
    CHECK(contains(r.out, "H_h ="));
  }

  TEST_CASE("construct")
  {
    auto const r = run({"construct2", "--input", data("class2_q31_n10.json")});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "theorem applicable: yes"));
    CHECK(contains(r.out, "[10,3,8]"));

    auto const j = run({"construct2", "--output", "json", "--input", data("class2_q31_n10.json")});
    auto const doc = nlohmann::json::parse(j.out);
    CHECK(doc["r"] == 7);
    CHECK(doc["quadratic"] == 0);
    CHECK(doc["applicable"] == true);
    CHECK(doc["report"]["lcd"] == true);
    for (auto const &item : doc["record"]) {
      CHECK(item["holds"] == true);
      CHECK(item["condition"].is_string());
    }

    CHECK(run({"construct1", "--input", data("class2_q31_n10.json")}).code == exit_input);
    auto const c1 = run({"construct1", "--input", data("search_q37_n9.json")});
    CHECK(c1.code == exit_ok); // eta defaults to zero: the GRS case, r = 1
    CHECK(contains(c1.out, "theorem applicable: yes"));
  }

  TEST_CASE("search")
  {
    auto const r = run({"search", "--budget", "1369", "--input", data("search_q37_n9.json")});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "eta = (22,24)  [9,3,7] LCD MDS"));

    auto const j = run({"search", "--budget", "1369", "--output", "json", "--input", data("search_q37_n9.json")});
    auto const doc = nlohmann::json::parse(j.out);
    bool       found = false;
    for (auto const &hit : doc) { found = found || hit["eta"] == nlohmann::json::array({22, 24}); }
    CHECK(found);

    CHECK(run({"search", "--budget", "0", "--input", data("search_q37_n9.json")}).code == exit_input);
    CHECK(run({"search", "--input", data("search_q37_n9.json")}).code == exit_input);

    auto const a = run({"search", "--budget", "200", "--seed", "5", "--input", data("search_q37_n9.json")});
    auto const b = run({"search", "--budget", "200", "--seed", "5", "--input", data("search_q37_n9.json")});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);

    auto const toy = run({"search", "--budget", "7", "--input", data("search_q7_n6.json")});
    CHECK(toy.code == exit_ok);
    CHECK(contains(toy.out, "0 hit(s)"));
  }

  TEST_CASE("reference examples command")
  {
    auto const r = run({"paper-examples"});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "4/4 pass"));
    CHECK(contains(r.out, "[15,4]"));
    CHECK(contains(r.out, "[9,3,7]     LCD MDS"));
    CHECK(contains(r.out, "[15,6]"));
    CHECK(contains(r.out, "[10,3,8]    LCD MDS"));

    auto const j   = run({"paper-examples", "--output", "json"});
    auto const doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 4);
    for (auto const &row : doc) { CHECK(row["passed"] == true); }

    auto const bad = run({"paper-examples", "--corrupt-entry", "2,3,5"});
    CHECK(bad.code == exit_verification);
    CHECK(contains(bad.err, "row 3, col 5: got 21, want 22"));
    CHECK(contains(bad.out, "3/4 pass"));

    auto const eta = run({"paper-examples", "--perturb-eta", "2,1"});
    CHECK(eta.code == exit_verification);
    CHECK(contains(eta.err, "first mismatch at row 2"));

    CHECK(run({"paper-examples", "--corrupt-entry", "9,1,1"}).code == exit_input);
    CHECK(run({"paper-examples", "--corrupt-entry", "1,9,1"}).code == exit_input);
  }
}
