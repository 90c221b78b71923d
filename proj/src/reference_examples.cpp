#include "tgrs/reference_examples.hpp"

#include <sstream>

namespace tgrs {

namespace {

auto elems(FieldRef f, std::vector<std::int64_t> const &xs) -> std::vector<GF>
{
  std::vector<GF> out;
  out.reserve(xs.size());
  for (auto x : xs) { out.push_back(f->from_int(x)); }
  return out;
}

auto residue(FieldRef f, std::int64_t x) -> std::int64_t { return f->from_int(x).rep(); }

} // namespace

auto reference_examples() -> std::vector<ReferenceExample>
{
  auto const *f31 = Field::get(31);
  auto const *f37 = Field::get(37);
  std::vector<ReferenceExample> out;

  {
    Class1Params p{f31, 15, 4, 1, 3, f31->one(), elems(f31, {5, 21, 12, 14}), elems(f31, {18, 23, 5}),
                   {1, 1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1},
                   elems(f31, {2, 20, 25, 1, 4, 5, 7, 8, 9, 10, 14, 16, 18, 19, 28})};
    out.push_back({"class1 q=31 [15,4]",
                   p,
                   {{18, 23, 5, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1},
                    {8, 10, 16, 22, 27, 17, -2, 18, -2, 1, 20, 21, 12, 17, 27},
                    {10, 24, 25, 1, 16, 25, 13, 2, 12, 24, 10, 23, 14, 11, 9},
                    {20, 15, 5, 1, 2, 1, -2, 16, 15, 23, 16, 27, 4, 23, 4}},
                   14,
                   std::nullopt,
                   true,
                   std::nullopt,
                   std::nullopt});
  }
  {
    Class1Params p{f37, 9, 3, 1, 1, f37->one(), elems(f37, {22, 24}), elems(f37, {21, 30}),
                   {1, 1, -1, 1, 1, 1, -1},
                   elems(f37, {1, 16, 26, 12, 33, 10, 34, 7, 9})};
    out.push_back({"class1 q=37 [9,3,7]",
                   p,
                   {{21, 30, 1, 1, -1, 1, 1, 1, -1},
                    {25, 33, 6, 6, 4, 13, 15, 20, 19},
                    {21, 21, 10, 33, 21, 26, 9, 12, 30}},
                   3,
                   std::nullopt,
                   true,
                   true,
                   7});
  }
  {
    Class2Params p{f31, 15, 1, 3, 0, f31->one(), elems(f31, {3, 21, 22, 1}), elems(f31, {25, 21, 22, 23, 6}),
                   {1, 1, 1, 1, -1, 1, -1, 1, -1, 1},
                   elems(f31, {1, 5, 8, 25, 28, 2, 4, 7, 9, 10, 14, 16, 18, 19, 20})};
    out.push_back({"class2 q=31 [15,6]",
                   p,
                   {{25, 21, 22, 23, 6, 1, 1, 1, 1, -1, 1, -1, 1, -1, 1},
                    {22, 25, 5, 20, 5, 5, 1, -2, 26, 15, 0, 19, 8, 17, -1},
                    {25, -2, 13, 22, 23, 4, 16, 18, 19, 24, 10, 23, 14, 11, 28},
                    {25, 21, 11, 23, 24, 8, 2, 2, 16, 23, 16, 27, 4, 23, 2},
                    {25, 12, 26, 17, 21, 16, 8, 14, 20, 13, 7, -2, 10, 3, 9},
                    {25, -2, 22, 22, -1, 1, 1, 5, 25, 6, 5, -1, 25, 26, 25}},
                   15,
                   0,
                   true,
                   std::nullopt,
                   std::nullopt});
  }
  {
    Class2Params p{f31, 10, 1, 2, 2, f31->one(), elems(f31, {28, 6, 0}), elems(f31, {22, 15}),
                   {-1, 1, 1, 1, 1, -1, -1, -1},
                   elems(f31, {30, 2, 29, 27, 1, 8, 16, 4, 23, 15})};
    out.push_back({"class2 q=31 [10,3,8]",
                   p,
                   {{22, 15, -1, 1, 1, 1, 1, -1, -1, -1},
                    {21, 25, 6, 19, 4, 15, 16, 16, 29, 23},
                    {22, 29, 27, 16, 1, 2, 8, 15, 29, 23}},
                   7,
                   0,
                   true,
                   true,
                   8});
  }
  return out;
}

auto check_example(ReferenceExample const &ex, ClassifyOptions opts) -> ExampleOutcome
{
  ExampleOutcome out;
  out.name = ex.name;

  auto const built = build(ex.params);
  auto const f     = built.spec.field();
  auto const g     = generator_matrix(built.spec);

  if (g.rows() != static_cast<Index>(ex.g.size()) || (!ex.g.empty() && g.cols() != static_cast<Index>(ex.g[0].size()))) {
    out.shape_ok = false;
    out.failures.push_back("generator matrix shape " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  } else {
    for (Index i = 0; i < g.rows() && !out.mismatch; ++i) {
      for (Index c = 0; c < g.cols(); ++c) {
        auto const got  = static_cast<std::int64_t>(g(i, c).rep());
        auto const want = residue(f, ex.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
        if (got != want) {
          out.mismatch = EntryMismatch{static_cast<int>(i), static_cast<int>(c), got, want};
          break;
        }
      }
    }
  }
  if (out.mismatch) {
    auto const &m = *out.mismatch;
    out.failures.push_back("G entry (" + std::to_string(m.row + 1) + "," + std::to_string(m.col + 1) + ") got " +
                           std::to_string(m.got) + ", want " + std::to_string(m.want));
  }

  out.r          = built.r.rep();
  out.applicable = built.applicable;
  if (out.r != residue(f, ex.r)) {
    out.failures.push_back("r_{h-1} = " + std::to_string(out.r) + ", want " + std::to_string(residue(f, ex.r)));
  }
  if (ex.quadratic) {
    auto const got = built.quadratic ? static_cast<std::int64_t>(built.quadratic->rep()) : -1;
    if (got != residue(f, *ex.quadratic)) { out.failures.push_back("quadratic sum = " + std::to_string(got)); }
  }
  if (!built.applicable) { out.failures.push_back("construction hypotheses do not all hold"); }

  opts.want_distance = ex.distance.has_value();
  out.report         = classify(built.spec, opts);
  if (out.report.is_lcd != ex.lcd) {
    out.failures.push_back("hull dimension " + std::to_string(out.report.hull_dim));
  }
  if (ex.mds && out.report.is_mds != *ex.mds) { out.failures.push_back(out.report.is_mds ? "unexpectedly MDS" : "not MDS"); }
  if (ex.distance && out.report.min_distance != ex.distance) {
    out.failures.push_back("minimum distance " +
                           (out.report.min_distance ? std::to_string(*out.report.min_distance) : std::string("?")) +
                           ", want " + std::to_string(*ex.distance));
  }
  out.passed = out.failures.empty();
  return out;
}

void corrupt_entry(ReferenceExample &ex, int row, int col)
{
  if (row < 0 || row >= static_cast<int>(ex.g.size()) || col < 0 ||
      col >= static_cast<int>(ex.g[static_cast<std::size_t>(row)].size())) {
    throw UsageError("corrupt_entry: (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  }
  ex.g[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += 1;
}

void perturb_eta(ReferenceExample &ex, int index)
{
  std::visit(
    [&](auto &p) {
      if (index < 0 || index >= static_cast<int>(p.eta.size())) {
        throw UsageError("perturb_eta: index " + std::to_string(index) + " out of range");
      }
      auto &x = p.eta[static_cast<std::size_t>(index)];
      x       = x + p.field->one();
    },
    ex.params);
}

} // namespace tgrs
