#include "tgrs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tgrs::io {

namespace {

[[noreturn]] void fail(std::string const &path, std::string const &msg) { throw InputError(path + ": " + msg); }

auto field_at(json const &j, std::string const &key, std::string const &path) -> json const &
{
  if (!j.is_object()) { fail(path, "expected an object"); }
  auto it = j.find(key);
  if (it == j.end()) { fail(path, "missing field '" + key + "'"); }
  return *it;
}

auto child(std::string const &path, std::string const &key) -> std::string
{
  return path.empty() ? key : path + "." + key;
}

auto child(std::string const &path, std::size_t i) -> std::string { return path + "[" + std::to_string(i) + "]"; }

auto as_int(json const &j, std::string const &path) -> std::int64_t
{
  if (!j.is_number_integer()) { fail(path, "expected an integer, got " + j.dump()); }
  return j.get<std::int64_t>();
}

auto int_at(json const &j, std::string const &key, std::string const &path) -> int
{
  auto const v = as_int(field_at(j, key, path), child(path, key));
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(child(path, key), "integer out of range");
  }
  return static_cast<int>(v);
}

auto as_array(json const &j, std::string const &path) -> json const &
{
  if (!j.is_array()) { fail(path, "expected an array, got " + j.dump()); }
  return j;
}

auto elements_from_json(json const &j, FieldRef f, std::string const &path) -> std::vector<GF>
{
  std::vector<GF> out;
  auto const     &a = as_array(j, path);
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) { out.push_back(element_from_json(a[i], f, child(path, i))); }
  return out;
}

auto elements_to_json(std::vector<GF> const &xs, FieldRef f) -> json
{
  json a = json::array();
  for (auto const &x : xs) { a.push_back(to_json(x, f)); }
  return a;
}

auto subset_to_json(std::optional<Subset> const &s) -> json
{
  if (!s) { return nullptr; }
  json a = json::array();
  for (int i : *s) { a.push_back(i + 1); }
  return a;
}

auto subset_from_json(json const &j, std::string const &path) -> std::optional<Subset>
{
  if (j.is_null()) { return std::nullopt; }
  Subset      s;
  auto const &a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto const v = as_int(a[i], child(path, i));
    if (v < 1) { fail(child(path, i), "indices are 1-based"); }
    s.push_back(static_cast<int>(v - 1));
  }
  return s;
}

auto bool_at(json const &j, std::string const &key, std::string const &path) -> bool
{
  auto const &v = field_at(j, key, path);
  if (!v.is_boolean()) { fail(child(path, key), "expected a boolean"); }
  return v.get<bool>();
}

auto opt_at(json const &j, std::string const &key) -> json const *
{
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

auto signs_from_json(json const &j, std::string const &path) -> std::vector<int>
{
  std::vector<int> out;
  auto const      &a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto const v = as_int(a[i], child(path, i));
    if (v != 1 && v != -1) { fail(child(path, i), "expected +1 or -1"); }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

} // namespace

auto parse(std::string_view text, std::string_view source) -> json
{
  try {
    return json::parse(text);
  } catch (json::parse_error const &e) {
    std::size_t line = 1;
    std::size_t col  = 1;
    auto const  stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) { msg = msg.substr(pos); }
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

auto read_file(std::string const &path) -> json
{
  std::ifstream in(path);
  if (!in) { throw InputError(path + ": cannot open file"); }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

auto to_json(FieldRef f) -> json
{
  json j = {{"p", f->p()}, {"m", f->m()}};
  if (f->m() > 1) { j["modulus"] = f->modulus(); }
  return j;
}

auto field_from_json(json const &j) -> FieldRef
{
  std::string const path = "field";
  auto const        p    = as_int(field_at(j, "p", path), "field.p");
  std::int64_t      m    = 1;
  if (auto const *mj = opt_at(j, "m")) { m = as_int(*mj, "field.m"); }
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) { fail("field.p", "out of range"); }
  if (m < 1 || m > 31) { fail("field.m", "out of range"); }
  std::vector<std::uint32_t> modulus;
  if (auto const *mod = opt_at(j, "modulus")) {
    auto const &a = as_array(*mod, "field.modulus");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto const c = as_int(a[i], child("field.modulus", i));
      if (c < 0 || c >= p) { fail(child("field.modulus", i), "coefficient not in [0, p)"); }
      modulus.push_back(static_cast<std::uint32_t>(c));
    }
  } else if (m > 1) {
    fail(path, "missing field 'modulus' (required when m > 1)");
  }
  return Field::get(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), std::move(modulus));
}

auto to_json(GF const &x, FieldRef f) -> json
{
  auto const y = x.in(f);
  if (f->m() == 1) { return y.rep(); }
  return y.coeffs();
}

auto element_from_json(json const &j, FieldRef f, std::string const &path) -> GF
{
  if (f->m() == 1) { return f->from_int(as_int(j, path)); }
  if (j.is_number_integer()) { return f->from_int(j.get<std::int64_t>()); }
  auto const               &a = as_array(j, path);
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < a.size(); ++i) { c.push_back(as_int(a[i], child(path, i))); }
  if (c.size() > f->m()) { fail(path, "more than m coefficients"); }
  return f->from_coeffs(c);
}

auto to_json(Poly const &p) -> json
{
  json a = json::array();
  if (auto d = p.degree()) {
    for (std::size_t i = 0; i <= *d; ++i) { a.push_back(to_json(p.coeff(i), p.field())); }
  }
  return a;
}

auto poly_from_json(json const &j, FieldRef f) -> Poly { return Poly(f, elements_from_json(j, f, "poly")); }

auto to_json(MatGF const &m, FieldRef f) -> json
{
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) { row.push_back(to_json(m(i, c), f)); }
    rows.push_back(std::move(row));
  }
  return rows;
}

auto matrix_from_json(json const &j, FieldRef f, std::string const &path) -> MatGF
{
  auto const &rows = as_array(j, path);
  if (rows.empty()) { return MatGF(0, 0); }
  auto const cols = as_array(rows[0], child(path, 0)).size();
  MatGF      m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto const &row = as_array(rows[i], child(path, i));
    if (row.size() != cols) { fail(child(path, i), "ragged matrix: expected " + std::to_string(cols) + " entries"); }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(i), static_cast<Index>(c)) = element_from_json(row[c], f, child(child(path, i), c));
    }
  }
  return m;
}

auto to_json(TgrsSpec const &spec) -> json
{
  auto const f = spec.field();
  return {
    {"field", to_json(f)},
    {"n", spec.n()},
    {"k", spec.k()},
    {"l", spec.l()},
    {"h", spec.h()},
    {"alpha", elements_to_json(spec.alpha(), f)},
    {"v", elements_to_json(spec.v(), f)},
    {"eta", elements_to_json(spec.eta(), f)},
  };
}

auto spec_from_json(json const &j) -> TgrsSpec
{
  if (!j.is_object()) { fail("spec", "expected an object"); }
  auto const f = field_from_json(field_at(j, "field", ""));
  return TgrsSpec(f, int_at(j, "n", ""), int_at(j, "k", ""), int_at(j, "l", ""), int_at(j, "h", ""),
                  elements_from_json(field_at(j, "alpha", ""), f, "alpha"),
                  elements_from_json(field_at(j, "v", ""), f, "v"), elements_from_json(field_at(j, "eta", ""), f, "eta"));
}

auto to_json(CodeReport const &r) -> json
{
  json j = {
    {"parameters", r.parameters()},
    {"n", r.n},
    {"k", r.k},
    {"mds", r.is_mds},
    {"amds", r.is_amds},
    {"lcd", r.is_lcd},
    {"hull_dimension", r.hull_dim},
    {"boundary_hook", r.boundary_hook},
    {"min_distance", r.min_distance ? json(*r.min_distance) : json(nullptr)},
    {"distance_consistent", r.distance_consistent ? json(*r.distance_consistent) : json(nullptr)},
    {"mds_witness", subset_to_json(r.mds_witness)},
    {"amds_dependent", subset_to_json(r.amds_dependent)},
    {"amds_rank_deficient", subset_to_json(r.amds_rank_deficient)},
  };
  return j;
}

auto report_from_json(json const &j) -> CodeReport
{
  std::string const path = "report";
  CodeReport        r;
  r.n             = int_at(j, "n", path);
  r.k             = int_at(j, "k", path);
  r.is_mds        = bool_at(j, "mds", path);
  r.is_amds       = bool_at(j, "amds", path);
  r.is_lcd        = bool_at(j, "lcd", path);
  r.hull_dim      = int_at(j, "hull_dimension", path);
  r.boundary_hook = bool_at(j, "boundary_hook", path);
  if (auto const &d = field_at(j, "min_distance", path); !d.is_null()) {
    r.min_distance = static_cast<int>(as_int(d, "report.min_distance"));
  }
  if (auto const &c = field_at(j, "distance_consistent", path); !c.is_null()) {
    if (!c.is_boolean()) { fail("report.distance_consistent", "expected a boolean or null"); }
    r.distance_consistent = c.get<bool>();
  }
  r.mds_witness         = subset_from_json(field_at(j, "mds_witness", path), "report.mds_witness");
  r.amds_dependent      = subset_from_json(field_at(j, "amds_dependent", path), "report.amds_dependent");
  r.amds_rank_deficient = subset_from_json(field_at(j, "amds_rank_deficient", path), "report.amds_rank_deficient");
  return r;
}

auto to_json(std::vector<VerificationItem> const &record) -> json
{
  json a = json::array();
  for (auto const &item : record) {
    a.push_back({{"condition", item.condition}, {"holds", item.holds}, {"evidence", item.evidence}});
  }
  return a;
}

auto to_json(Construction const &c) -> json
{
  auto const f = c.spec.field();
  return {
    {"spec", to_json(c.spec)},
    {"r", to_json(c.r, f)},
    {"quadratic", c.quadratic ? to_json(*c.quadratic, f) : json(nullptr)},
    {"applicable", c.applicable},
    {"record", to_json(c.record)},
  };
}

auto params_from_json(json const &j) -> ConstructionParams
{
  if (!j.is_object()) { fail("params", "expected an object"); }
  auto const f       = field_from_json(field_at(j, "field", ""));
  auto const n       = int_at(j, "n", "");
  auto const h       = int_at(j, "h", "");
  auto const l       = int_at(j, "l", "");
  auto const lambda  = element_from_json(field_at(j, "lambda", ""), f, "lambda");
  auto const v_head  = elements_from_json(field_at(j, "v_head", ""), f, "v_head");
  auto const signs   = signs_from_json(field_at(j, "v_tail_signs", ""), "v_tail_signs");
  std::vector<GF> eta;
  if (auto const *e = opt_at(j, "eta")) {
    eta = elements_from_json(*e, f, "eta");
  } else if (l >= 0) {
    eta.assign(static_cast<std::size_t>(l) + 1, f->zero());
  }
  std::vector<GF> order;
  if (auto const *o = opt_at(j, "alpha_order")) { order = elements_from_json(*o, f, "alpha_order"); }

  if (opt_at(j, "m_gap")) {
    Class2Params p{f, n, h, l, int_at(j, "m_gap", ""), lambda, eta, v_head, signs, order};
    if (opt_at(j, "k") && int_at(j, "k", "") != p.k()) {
      fail("k", "inconsistent with (n - l - m_gap)/2 = " + std::to_string(p.k()));
    }
    return p;
  }
  return Class1Params{f, n, int_at(j, "k", ""), h, l, lambda, eta, v_head, signs, order};
}

auto to_json(ConstructionParams const &p) -> json
{
  return std::visit(
    [](auto const &c) -> json {
      auto const f = c.field;
      json       j = {
        {"field", to_json(f)},
        {"n", c.n},
        {"h", c.h},
        {"l", c.l},
        {"lambda", to_json(c.lambda, f)},
        {"eta", elements_to_json(c.eta, f)},
        {"v_head", elements_to_json(c.v_head, f)},
        {"v_tail_signs", c.v_tail_signs},
      };
      if (!c.alpha_order.empty()) { j["alpha_order"] = elements_to_json(c.alpha_order, f); }
      if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Class2Params>) {
        j["m_gap"] = c.m_gap;
      } else {
        j["k"] = c.k;
      }
      return j;
    },
    p);
}

auto to_json(std::vector<SearchHit> const &hits, FieldRef f) -> json
{
  json a = json::array();
  for (auto const &hit : hits) { a.push_back({{"eta", elements_to_json(hit.eta, f)}, {"report", to_json(hit.report)}}); }
  return a;
}

auto to_text(MatGF const &m, FieldRef f) -> std::string
{
  std::vector<std::string> cells;
  std::size_t              width = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index c = 0; c < m.cols(); ++c) {
      cells.push_back(m(i, c).in(f).to_string());
      width = std::max(width, cells.back().size());
    }
  }
  std::string out;
  std::size_t idx = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index c = 0; c < m.cols(); ++c) {
      auto const &s = cells[idx++];
      if (c > 0) { out += ' '; }
      out.append(width - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

auto to_text(CodeReport const &r) -> std::string
{
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto set = [](std::optional<Subset> const &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s->size(); ++i) { out += (i ? "," : "") + std::to_string((*s)[i] + 1); }
    return out + "}";
  };
  std::ostringstream os;
  os << "code           " << r.parameters() << '\n';
  os << "MDS            " << yes(r.is_mds) << '\n';
  os << "AMDS           " << yes(r.is_amds) << '\n';
  os << "LCD            " << yes(r.is_lcd) << '\n';
  os << "hull dimension " << r.hull_dim << '\n';
  os << "boundary hook  " << yes(r.boundary_hook) << '\n';
  if (r.min_distance) {
    os << "min distance   " << *r.min_distance << (r.distance_consistent.value_or(false) ? "" : " (inconsistent)")
       << '\n';
  } else {
    os << "min distance   not computed\n";
  }
  if (r.mds_witness) { os << "non-MDS minor  " << set(r.mds_witness) << '\n'; }
  if (r.amds_rank_deficient) { os << "rank-deficient " << set(r.amds_rank_deficient) << '\n'; }
  return os.str();
}

} // namespace tgrs::io
