#pragma once

// JSON and text formats.
//
//   field    {"p": 31, "m": 1}  or  {"p": 3, "m": 2, "modulus": [2, 2, 1]}
//   element  integer (m = 1, negatives normalized) or coefficient array (m > 1)
//   poly     coefficient array, low degree first
//   matrix   array of row arrays
//   spec     {"field", "n", "k", "l", "h", "alpha", "v", "eta"}
//   report   CodeReport with 1-based certificate indices
//   params   {"field", "n", "k", "h", "l", "lambda", "eta", "v_head",
//             "v_tail_signs", "alpha_order"?}; "m_gap" present => class 2
//             and k is derived (a given k must agree).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgrs/classify.hpp"
#include "tgrs/code.hpp"
#include "tgrs/lcdgen.hpp"
#include "tgrs/poly.hpp"

namespace tgrs::io {

using nlohmann::json;

// Malformed or ill-typed input. `what()` carries a location (line/column or
// field path).
struct InputError : Error
{
  using Error::Error;
};

// Parse text; syntax errors become InputError with "<source>:<line>:<col>".
auto parse(std::string_view text, std::string_view source = "<input>") -> json;
auto read_file(std::string const &path) -> json;

auto to_json(FieldRef f) -> json;
auto field_from_json(json const &j) -> FieldRef;

auto to_json(GF const &x, FieldRef f) -> json;
auto element_from_json(json const &j, FieldRef f, std::string const &path = "element") -> GF;

auto to_json(Poly const &p) -> json;
auto poly_from_json(json const &j, FieldRef f) -> Poly;

auto to_json(MatGF const &m, FieldRef f) -> json;
auto matrix_from_json(json const &j, FieldRef f, std::string const &path = "matrix") -> MatGF;

auto to_json(TgrsSpec const &spec) -> json;
auto spec_from_json(json const &j) -> TgrsSpec;

auto to_json(CodeReport const &r) -> json;
auto report_from_json(json const &j) -> CodeReport;

auto to_json(std::vector<VerificationItem> const &record) -> json;
auto to_json(Construction const &c) -> json;
auto params_from_json(json const &j) -> ConstructionParams;
auto to_json(ConstructionParams const &p) -> json;

auto to_json(std::vector<SearchHit> const &hits, FieldRef f) -> json;

// Canonical residues, right-aligned in columns.
auto to_text(MatGF const &m, FieldRef f) -> std::string;
auto to_text(CodeReport const &r) -> std::string;

} // namespace tgrs::io
