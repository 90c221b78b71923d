#include "tgrs/symm.hpp"

#include <string>

#include "tgrs/poly.hpp"

namespace tgrs {

SymContext::SymContext(std::vector<GF> points, int t_max)
  : field_(points.empty() ? nullptr : points.front().field())
  , points_(std::move(points))
{
  if (!field_) { throw ConstructionError("SymContext needs at least one bound point"); }
  for (auto &p : points_) { p = p.in(field_); }
  auto const n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points_[i] == points_[j]) {
        throw ConstructionError("evaluation points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " coincide");
      }
    }
  }
  s_ = complete_table(t_max < 0 ? 0 : t_max);

  u_.reserve(n);
  loo_coeffs_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GF              d = field_->one();
    std::vector<GF> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) { continue; }
      d *= points_[i] - points_[j];
      others.push_back(points_[j]);
    }
    u_.push_back(d.inverse());
    auto g = from_roots(field_, others);
    auto c = g.coeffs();
    c.resize(n, field_->zero());
    loo_coeffs_.push_back(std::move(c));
  }
}

// Prefix recurrence S_t(x_1..x_j) = S_t(x_1..x_{j-1}) + x_j S_{t-1}(x_1..x_j).
auto SymContext::complete_table(int t_max) const -> std::vector<GF>
{
  std::vector<GF> s(static_cast<std::size_t>(t_max) + 1, field_->zero());
  s[0] = field_->one();
  for (auto const &x : points_) {
    for (std::size_t t = 1; t < s.size(); ++t) { s[t] += x * s[t - 1]; }
  }
  return s;
}

auto SymContext::complete_symmetric(int t) const -> GF
{
  if (t < 0) { return field_->zero(); }
  if (static_cast<std::size_t>(t) < s_.size()) { return s_[static_cast<std::size_t>(t)]; }
  return complete_table(t).back();
}

auto SymContext::sigma_excluding(int r, int i) const -> GF
{
  if (i < 0 || i >= n()) { throw UsageError("sigma_excluding: point index " + std::to_string(i) + " out of range"); }
  if (r < 0 || r > n() - 1) { throw UsageError("sigma_excluding: degree " + std::to_string(r) + " out of range"); }
  // prod_{j != i}(x - alpha_j) = sum_r (-1)^r sigma_r(i) x^{n-1-r}
  GF const c = loo_coeffs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(n() - 1 - r)];
  return r % 2 == 0 ? c : -c;
}

auto SymContext::hook_weights(int h) const -> HookWeights
{
  if (h < 0 || h > n() - 1) { throw UsageError("hook_weights: h = " + std::to_string(h) + " out of range"); }
  HookWeights out;
  bool const  negate = (n() + h + 1) % 2 != 0;
  for (int i = 0; i < n(); ++i) {
    GF wt = sigma_excluding(n() - 1 - h, i);
    if (negate) { wt = -wt; }
    out.w_tilde.push_back(wt);
    out.w.push_back(u_[static_cast<std::size_t>(i)] * wt);
  }
  return out;
}

auto SymContext::psi_values(std::vector<GF> const &eta) const -> std::vector<GF>
{
  auto const      l = static_cast<int>(eta.size()) - 1;
  std::vector<GF> psi;
  for (int s = 0; s <= l; ++s) {
    GF acc = field_->zero();
    for (int t = s; t <= l; ++t) { acc += eta[static_cast<std::size_t>(t)] * complete_symmetric(t - s); }
    psi.push_back(acc);
  }
  return psi;
}

} // namespace tgrs
