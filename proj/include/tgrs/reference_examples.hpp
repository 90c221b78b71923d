#pragma once

// Four published LCD constructions with their generator matrices as printed
// (signed entries such as -1, -2 are kept and reduced only when compared).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgrs/classify.hpp"
#include "tgrs/lcdgen.hpp"

namespace tgrs {

struct ReferenceExample
{
  std::string                            name;
  ConstructionParams                     params;
  std::vector<std::vector<std::int64_t>> g; // as printed
  std::int64_t                           r = 0;
  std::optional<std::int64_t>            quadratic; // class 2: expected residue
  bool                                   lcd = true;
  std::optional<bool>                    mds;      // only where the source states it
  std::optional<int>                     distance; // likewise
};

auto reference_examples() -> std::vector<ReferenceExample>;

struct EntryMismatch
{
  int          row = 0; // 0-based
  int          col = 0;
  std::int64_t got = 0;
  std::int64_t want = 0;
};

struct ExampleOutcome
{
  std::string                  name;
  bool                         passed = false;
  std::optional<EntryMismatch> mismatch; // first differing G entry, row-major
  bool                         shape_ok = true;
  std::int64_t                 r        = 0;
  bool                         applicable = false;
  CodeReport                   report;
  std::vector<std::string>     failures; // human-readable reasons
};

auto check_example(ReferenceExample const &ex, ClassifyOptions opts = {}) -> ExampleOutcome;

// Negative-control hooks: shift one printed G entry (0-based) or one eta
// component by +1.
void corrupt_entry(ReferenceExample &ex, int row, int col);
void perturb_eta(ReferenceExample &ex, int index);

} // namespace tgrs
