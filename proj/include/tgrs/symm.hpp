#pragma once

#include <cstdint>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

struct HookWeights
{
  std::vector<GF> w;       // V w^T = e_{h+1}
  std::vector<GF> w_tilde; // w_i / u_i
};

// Symmetric-function values over a fixed set of pairwise-distinct points
// alpha_1..alpha_n: complete symmetric S_t, the dual coefficients
// u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}, and the leave-one-out
// elementary symmetric values sigma_r(i).
//
// Indices i are 0-based. All tables are filled at construction.
class SymContext
{
public:
  // Throws ConstructionError if the points are not pairwise distinct.
  SymContext(std::vector<GF> points, int t_max);

  auto n() const noexcept -> int { return static_cast<int>(points_.size()); }
  auto points() const noexcept -> std::vector<GF> const & { return points_; }
  auto field() const noexcept -> FieldRef { return field_; }

  // S_t(alpha); 0 for t < 0, 1 for t = 0. Values past t_max are computed on
  // demand.
  auto complete_symmetric(int t) const -> GF;
  auto dual_coeffs() const noexcept -> std::vector<GF> const & { return u_; }
  // sigma_r over all points except alpha_i, 0 <= r <= n - 1.
  auto sigma_excluding(int r, int i) const -> GF;
  // w_i = (-1)^{n+h+1} u_i sigma_{n-1-h}(i), 0 <= h <= n - 1.
  auto hook_weights(int h) const -> HookWeights;
  // Psi_s = sum_{t=s}^{l} eta_t S_{t-s} for s = 0..l, l = eta.size() - 1.
  auto psi_values(std::vector<GF> const &eta) const -> std::vector<GF>;

private:
  auto complete_table(int t_max) const -> std::vector<GF>;

  FieldRef                     field_;
  std::vector<GF>              points_;
  std::vector<GF>              s_;          // S_0..S_{t_max}
  std::vector<GF>              u_;          // u_1..u_n
  std::vector<std::vector<GF>> loo_coeffs_; // prod_{j != i} (x - alpha_j), low first
};

} // namespace tgrs
