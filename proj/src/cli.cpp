#include "tgrs/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tgrs/io.hpp"
#include "tgrs/reference_examples.hpp"

namespace tgrs {

namespace {

using io::json;

struct RunConfig
{
  std::string   command;
  std::string   input_path;
  std::string   output = "text";
  int           distance_cap = kDefaultDistanceCap;
  bool          unsafe_cap   = false;
  std::uint64_t seed         = 0;
  std::int64_t  budget       = -1;
  std::string   strategy     = "auto";
  // paper-examples negative controls, 1-based "example,row,col" / "example,index"
  std::vector<int> corrupt;
  std::vector<int> perturb;
};

auto load_input(RunConfig const &cfg, std::istream &in) -> json
{
  if (!cfg.input_path.empty()) { return io::read_file(cfg.input_path); }
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str(), "<stdin>");
}

auto classify_options(RunConfig const &cfg) -> ClassifyOptions
{
  return ClassifyOptions{true, cfg.distance_cap, default_workers()};
}

auto verdict(CodeReport const &r) -> std::string
{
  std::string s = r.is_lcd ? "LCD" : "hull " + std::to_string(r.hull_dim);
  if (r.is_mds) { s += " MDS"; }
  if (r.is_amds) { s += " AMDS"; }
  return s;
}

void print(std::ostream &out, json const &j) { out << j.dump(2) << '\n'; }

auto cmd_build(RunConfig const &cfg, std::istream &in, std::ostream &out) -> int
{
  auto const spec = io::spec_from_json(load_input(cfg, in));
  auto const f    = spec.field();
  auto const g    = generator_matrix(spec);
  auto const h    = parity_check_matrix(spec);
  if (cfg.output == "json") {
    print(out, {{"spec", io::to_json(spec)},
                {"generator_matrix", io::to_json(g, f)},
                {"parity_check_matrix", io::to_json(h, f)}});
  } else {
    out << "field " << f->name() << ", n = " << spec.n() << ", k = " << spec.k() << ", h = " << spec.h()
        << ", l = " << spec.l() << "\n\nG_h =\n"
        << io::to_text(g, f) << "\nH_h =\n"
        << io::to_text(h, f);
  }
  return exit_ok;
}

auto cmd_check(RunConfig const &cfg, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
  auto const spec   = io::spec_from_json(load_input(cfg, in));
  auto const f      = spec.field();
  auto const g      = generator_matrix(spec);
  auto const h      = parity_check_matrix(spec);
  auto const report = classify(spec, classify_options(cfg));
  if (cfg.output == "json") {
    print(out, {{"generator_matrix", io::to_json(g, f)},
                {"parity_check_matrix", io::to_json(h, f)},
                {"report", io::to_json(report)}});
  } else {
    out << "G_h =\n" << io::to_text(g, f) << "\nH_h =\n" << io::to_text(h, f) << '\n' << io::to_text(report);
  }
  if (report.distance_consistent == false) {
    err << "error: minimum distance disagrees with the MDS/AMDS verdicts\n";
    return exit_verification;
  }
  return exit_ok;
}

auto cmd_construct(RunConfig const &cfg, int cls, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
  auto const params = io::params_from_json(load_input(cfg, in));
  if (static_cast<int>(params.index()) + 1 != cls) {
    throw io::InputError(cls == 1 ? "params: 'm_gap' given; use construct2" : "params: missing field 'm_gap'");
  }
  auto const c      = build(params);
  auto const f      = c.spec.field();
  auto const g      = generator_matrix(c.spec);
  auto const report = classify(c.spec, classify_options(cfg));
  if (cfg.output == "json") {
    auto j                = io::to_json(c);
    j["generator_matrix"] = io::to_json(g, f);
    j["report"]           = io::to_json(report);
    print(out, j);
  } else {
    out << "verification record:\n";
    for (auto const &item : c.record) {
      out << "  [" << (item.holds ? "ok" : "--") << "] " << item.condition << "  (" << item.evidence << ")\n";
    }
    out << "theorem applicable: " << (c.applicable ? "yes" : "no") << "\n\nG_h =\n"
        << io::to_text(g, f) << '\n'
        << io::to_text(report);
  }
  if (c.applicable && !report.is_lcd) {
    err << "error: hypotheses hold but the code has hull dimension " << report.hull_dim << '\n';
    return exit_verification;
  }
  return exit_ok;
}

auto cmd_search(RunConfig const &cfg, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
  if (cfg.budget <= 0) { throw io::InputError("--budget must be a positive integer"); }
  auto const    tmpl = io::params_from_json(load_input(cfg, in));
  SearchOptions opts;
  opts.budget   = static_cast<std::uint64_t>(cfg.budget);
  opts.seed     = cfg.seed;
  opts.strategy = cfg.strategy == "exhaustive"   ? SearchStrategy::exhaustive
                  : cfg.strategy == "randomized" ? SearchStrategy::randomized
                                                 : SearchStrategy::automatic;
  opts.classify = classify_options(cfg);
  opts.workers  = opts.classify.workers;
  auto const hits = search_eta(tmpl, opts);
  auto const f    = std::visit([](auto const &p) { return p.field; }, tmpl);

  if (cfg.output == "json") {
    print(out, io::to_json(hits, f));
  } else {
    out << hits.size() << " hit(s)\n";
    for (auto const &hit : hits) {
      out << "eta = (";
      for (std::size_t i = 0; i < hit.eta.size(); ++i) { out << (i ? "," : "") << hit.eta[i].to_string(); }
      out << ")  " << hit.report.parameters() << ' ' << verdict(hit.report) << '\n';
    }
  }
  bool const ok = std::all_of(hits.begin(), hits.end(), [](SearchHit const &h) { return h.report.is_lcd && h.report.is_mds; });
  if (!ok) {
    err << "error: a hit failed the LCD MDS re-check\n";
    return exit_verification;
  }
  return exit_ok;
}

auto cmd_paper_examples(RunConfig const &cfg, std::ostream &out, std::ostream &err) -> int
{
  auto examples = reference_examples();
  auto pick     = [&](int one_based) -> ReferenceExample & {
    if (one_based < 1 || one_based > static_cast<int>(examples.size())) {
      throw UsageError("example index " + std::to_string(one_based) + " out of range 1.." +
                       std::to_string(examples.size()));
    }
    return examples[static_cast<std::size_t>(one_based - 1)];
  };
  if (!cfg.corrupt.empty()) { corrupt_entry(pick(cfg.corrupt[0]), cfg.corrupt[1] - 1, cfg.corrupt[2] - 1); }
  if (!cfg.perturb.empty()) { perturb_eta(pick(cfg.perturb[0]), cfg.perturb[1] - 1); }

  auto                        opts = classify_options(cfg);
  std::vector<ExampleOutcome> outcomes;
  for (auto const &ex : examples) { outcomes.push_back(check_example(ex, opts)); }
  bool const all = std::all_of(outcomes.begin(), outcomes.end(), [](auto const &o) { return o.passed; });

  if (cfg.output == "json") {
    json a = json::array();
    for (auto const &o : outcomes) {
      json mm = nullptr;
      if (o.mismatch) {
        mm = {{"row", o.mismatch->row + 1}, {"col", o.mismatch->col + 1}, {"got", o.mismatch->got},
              {"want", o.mismatch->want}};
      }
      a.push_back({{"name", o.name},
                   {"passed", o.passed},
                   {"r", o.r},
                   {"applicable", o.applicable},
                   {"mismatch", mm},
                   {"failures", o.failures},
                   {"report", io::to_json(o.report)}});
    }
    print(out, a);
  } else {
    out << std::left << std::setw(24) << "example" << std::setw(6) << "G" << std::setw(5) << "r" << std::setw(12)
        << "code" << std::setw(10) << "verdict"
        << "result\n";
    for (auto const &o : outcomes) {
      out << std::setw(24) << o.name << std::setw(6) << (o.mismatch || !o.shape_ok ? "diff" : "ok") << std::setw(5)
          << o.r << std::setw(12) << o.report.parameters() << std::setw(10) << verdict(o.report)
          << (o.passed ? "PASS" : "FAIL") << '\n';
    }
    auto const passed = std::count_if(outcomes.begin(), outcomes.end(), [](auto const &o) { return o.passed; });
    out << passed << "/" << outcomes.size() << " pass\n";
  }
  for (auto const &o : outcomes) {
    if (o.passed) { continue; }
    if (o.mismatch) {
      err << o.name << ": first mismatch at row " << o.mismatch->row + 1 << ", col " << o.mismatch->col + 1
          << ": got " << o.mismatch->got << ", want " << o.mismatch->want << '\n';
    }
    for (auto const &why : o.failures) {
      if (!o.mismatch || why.rfind("G entry", 0) != 0) { err << o.name << ": " << why << '\n'; }
    }
  }
  return all ? exit_ok : exit_verification;
}

} // namespace

auto run_cli(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
  RunConfig cfg;
  CLI::App  app{"Twisted GRS code toolkit", "tgrs"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", cfg.input_path, "JSON input file (default: stdin)");
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--distance-cap", cfg.distance_cap, "Largest n for the minimum-distance search")
    ->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-cap", cfg.unsafe_cap, "Allow --distance-cap above 24");
  app.add_option("--seed", cfg.seed, "Seed for randomized search");
  app.add_option("--budget", cfg.budget, "Number of twist vectors to examine");
  app.add_option("--strategy", cfg.strategy, "Search strategy")
    ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}));

  app.add_subcommand("build", "Print G_h and H_h for a spec");
  app.add_subcommand("check", "Classify a spec");
  app.add_subcommand("construct1", "Class-1 LCD construction");
  app.add_subcommand("construct2", "Class-2 LCD construction");
  app.add_subcommand("search", "Search twist vectors for LCD MDS codes");
  auto *paper = app.add_subcommand("paper-examples", "Reproduce the four reference constructions");
  paper->add_option("--corrupt-entry", cfg.corrupt, "Test mode: add 1 to a printed G entry (example,row,col)")
    ->expected(3)
    ->delimiter(',')
    ->group("");
  paper->add_option("--perturb-eta", cfg.perturb, "Test mode: add 1 to an eta component (example,index)")
    ->expected(2)
    ->delimiter(',')
    ->group("");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::ParseError const &e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.distance_cap > kDefaultDistanceCap && !cfg.unsafe_cap) {
      throw UsageError("--distance-cap above " + std::to_string(kDefaultDistanceCap) + " needs --unsafe-cap");
    }
    if (cfg.command == "build") { return cmd_build(cfg, in, out); }
    if (cfg.command == "check") { return cmd_check(cfg, in, out, err); }
    if (cfg.command == "construct1") { return cmd_construct(cfg, 1, in, out, err); }
    if (cfg.command == "construct2") { return cmd_construct(cfg, 2, in, out, err); }
    if (cfg.command == "search") { return cmd_search(cfg, in, out, err); }
    return cmd_paper_examples(cfg, out, err);
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

} // namespace tgrs
