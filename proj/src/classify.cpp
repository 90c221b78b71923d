#include "tgrs/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "tgrs/poly.hpp"

namespace tgrs {

PhiWorkspace::PhiWorkspace(std::vector<GF> const &subset_points, int max_t)
  : field_(subset_points.empty() ? nullptr : subset_points.front().field())
  , k_(static_cast<int>(subset_points.size()))
  , max_t_(max_t)
{
  if (!field_) { throw UsageError("PhiWorkspace needs a nonempty subset"); }
  auto const g = from_roots(field_, subset_points);
  // c_j is the coefficient of x^{k-j}
  c_.reserve(static_cast<std::size_t>(k_) + 1);
  for (int j = 0; j <= k_; ++j) { c_.push_back(g.coeff(static_cast<std::size_t>(k_ - j))); }
}

auto PhiWorkspace::c(int j) const -> GF
{
  if (j < 0 || j > k_) { return field_->zero(); }
  return c_[static_cast<std::size_t>(j)];
}

auto PhiWorkspace::toeplitz(int t) const -> MatGF
{
  if (t < 0 || t > max_t_) { throw UsageError("toeplitz: t = " + std::to_string(t) + " out of range"); }
  MatGF a(t + 1, t + 1);
  for (int i = 0; i <= t; ++i) {
    for (int j = 0; j <= t; ++j) { a(i, j) = i >= j ? c(i - j) : field_->zero(); }
  }
  return a;
}

auto PhiWorkspace::c_vector(int t, int r) const -> VecGF
{
  if (t < 0 || t > max_t_) { throw UsageError("c_vector: t = " + std::to_string(t) + " out of range"); }
  if (r < 0 || r > k_ - 1) { throw UsageError("c_vector: r = " + std::to_string(r) + " out of range"); }
  VecGF v(t + 1);
  for (int i = 0; i <= t; ++i) { v(i) = c(k_ - r + i); }
  return v;
}

auto PhiWorkspace::ftr_coefficient(int t, int r) const -> GF
{
  if (t < 0 || t > max_t_) { throw UsageError("ftr_coefficient: t = " + std::to_string(t) + " out of range"); }
  if (r < 0 || r > k_ - 1) { throw UsageError("ftr_coefficient: r = " + std::to_string(r) + " out of range"); }
  // forward substitution on the unit lower-triangular Toeplitz system
  std::vector<GF> y(static_cast<std::size_t>(t) + 1, field_->zero());
  for (int i = 0; i <= t; ++i) {
    GF acc = c(k_ - r + i);
    for (int j = 0; j < i; ++j) { acc -= c(i - j) * y[static_cast<std::size_t>(j)]; }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return -y.back();
}

auto PhiWorkspace::phi_quantity(std::vector<GF> const &eta, int h) const -> GF
{
  GF acc = field_->one();
  for (std::size_t t = 0; t < eta.size(); ++t) {
    if (eta[t].is_zero()) { continue; }
    acc += eta[t] * ftr_coefficient(static_cast<int>(t), h);
  }
  return acc;
}

auto phi_quantity(TgrsSpec const &spec, Subset const &cols) -> GF
{
  std::vector<GF> pts;
  pts.reserve(cols.size());
  for (auto i : cols) { pts.push_back(spec.alpha()[static_cast<std::size_t>(i)]); }
  return PhiWorkspace(pts, spec.l()).phi_quantity(spec.eta(), spec.h());
}

auto is_mds_phi(TgrsSpec const &spec, unsigned workers) -> Verdict
{
  auto bad = find_first_combination(
    spec.n(), spec.k(), [&](Subset const &s) { return phi_quantity(spec, s).is_zero(); }, workers);
  return {!bad.has_value(), bad};
}

auto in_phi(TgrsSpec const &spec, unsigned workers) -> bool
{
  bool const nonzero = std::any_of(spec.eta().begin(), spec.eta().end(), [](GF const &x) { return !x.is_zero(); });
  return nonzero && is_mds_phi(spec, workers).holds;
}

auto is_mds_minors(MatGF const &g, unsigned workers) -> Verdict
{
  auto const k = static_cast<int>(g.rows());
  auto const n = static_cast<int>(g.cols());
  if (k > n) { throw UsageError("is_mds_minors: more rows than columns"); }
  auto bad = find_first_combination(
    n, k,
    [&](Subset const &s) {
      std::vector<Index> cols(s.begin(), s.end());
      return det(select_columns(g, cols)).is_zero();
    },
    workers);
  return {!bad.has_value(), bad};
}

auto is_amds(TgrsSpec const &spec, unsigned workers) -> AmdsVerdict
{
  AmdsVerdict out;
  out.dependent_columns = is_mds_phi(spec, workers).witness;
  if (!out.dependent_columns) { return out; }
  auto const k = spec.k();
  out.rank_deficient = find_first_combination(
    spec.n(), k + 1,
    [&](Subset const &j) {
      // rank k iff some k-subset of J has a nonvanishing minor
      for (int drop = 0; drop <= k; ++drop) {
        Subset i;
        i.reserve(static_cast<std::size_t>(k));
        for (int a = 0; a <= k; ++a) {
          if (a != drop) { i.push_back(j[static_cast<std::size_t>(a)]); }
        }
        if (!phi_quantity(spec, i).is_zero()) { return false; }
      }
      return true;
    },
    workers);
  out.holds = !out.rank_deficient.has_value();
  return out;
}

auto min_distance(MatGF const &h, int cap_n, unsigned workers) -> int
{
  auto const n = static_cast<int>(h.cols());
  if (n > cap_n) {
    throw ResourceLimit("min_distance: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap_n));
  }
  auto const r = static_cast<int>(h.rows());
  if (rank(h) != r) { throw UsageError("min_distance: parity-check matrix must have full row rank"); }
  for (int w = 1; w <= std::min(n, r + 1); ++w) {
    auto dep = find_first_combination(
      n, w,
      [&](Subset const &s) {
        std::vector<Index> cols(s.begin(), s.end());
        return rank(select_columns(h, cols)) < w;
      },
      workers);
    if (dep) { return w; }
  }
  // columns independent in every size: the code is {0}
  return n + 1;
}

auto hull_dimension(MatGF const &g, MatGF const &h) -> int
{
  auto const n = g.cols();
  if (h.cols() != n) { throw UsageError("hull_dimension: G and H have different lengths"); }
  if (rank(g) != g.rows()) { throw UsageError("hull_dimension: G does not have full row rank"); }
  if (rank(h) != h.rows()) { throw UsageError("hull_dimension: H does not have full row rank"); }
  if (g.rows() + h.rows() != n) { throw UsageError("hull_dimension: rows(G) + rows(H) != n"); }
  MatGF const prod = g * h.transpose();
  if (!is_zero_matrix(prod)) { throw UsageError("hull_dimension: G H^T != 0"); }
  return static_cast<int>(n - rank(vstack(g, h)));
}

auto CodeReport::parameters() const -> std::string
{
  std::string s = "[" + std::to_string(n) + "," + std::to_string(k);
  if (min_distance) { s += "," + std::to_string(*min_distance); }
  return s + "]";
}

auto classify(TgrsSpec const &spec, ClassifyOptions const &opts) -> CodeReport
{
  CodeReport r;
  r.n             = spec.n();
  r.k             = spec.k();
  r.boundary_hook = spec.boundary_hook();

  auto const mds = is_mds_phi(spec, opts.workers);
  r.is_mds       = mds.holds;
  r.mds_witness  = mds.witness;
  if (!r.is_mds) {
    auto const amds       = is_amds(spec, opts.workers);
    r.is_amds             = amds.holds;
    r.amds_dependent      = amds.dependent_columns;
    r.amds_rank_deficient = amds.rank_deficient;
  }

  auto const g = generator_matrix(spec);
  auto const h = parity_check_matrix(spec);
  r.hull_dim   = hull_dimension(g, h);
  r.is_lcd     = r.hull_dim == 0;

  if (opts.want_distance && spec.n() <= opts.distance_cap) {
    auto const d          = min_distance(h, opts.distance_cap, opts.workers);
    r.min_distance        = d;
    r.distance_consistent = (r.is_mds == (d == r.n - r.k + 1)) && (r.is_amds == (d == r.n - r.k));
  }
  return r;
}

auto default_workers() -> unsigned
{
  unsigned n = 0;
  if (char const *env = std::getenv("TGRS_WORKERS")) { n = static_cast<unsigned>(std::strtoul(env, nullptr, 10)); }
  if (n == 0) { n = std::max(1U, std::thread::hardware_concurrency()); }
  return n;
}

} // namespace tgrs
