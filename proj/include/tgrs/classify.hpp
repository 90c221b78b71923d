#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgrs/code.hpp"
#include "tgrs/combinations.hpp"
#include "tgrs/linalg.hpp"

namespace tgrs {

// Per k-subset I data for the MDS criterion. With
// g(x) = prod_{i in I} (x - alpha_i) = sum_j c_j x^{k-j} (c_0 = 1), A_t is the
// (t+1)x(t+1) lower-triangular Toeplitz matrix on c_0..c_t and
// c_t^{(r)} = (c_{k-r}, ..., c_{k-r+t}), indices outside [0, k] reading 0.
class PhiWorkspace
{
public:
  PhiWorkspace(std::vector<GF> const &subset_points, int max_t);

  auto k() const noexcept -> int { return k_; }
  auto max_t() const noexcept -> int { return max_t_; }
  // c_j for any j; zero outside [0, k].
  auto c(int j) const -> GF;
  auto toeplitz(int t) const -> MatGF;
  auto c_vector(int t, int r) const -> VecGF;

  // f_{t,r} = -e_{t+1}^T A_t^{-1} c_t^{(r)}: coefficient of alpha^r when
  // alpha^{k+t} is expanded in 1, alpha, ..., alpha^{k-1} on I.
  // Solved by forward substitution.
  auto ftr_coefficient(int t, int r) const -> GF;

  // 1 - sum_t eta_t e_{t+1}^T A_t^{-1} c_t^{(h)}; zero iff the k x k minor of
  // G_h on I vanishes.
  auto phi_quantity(std::vector<GF> const &eta, int h) const -> GF;

private:
  FieldRef        field_;
  int             k_;
  int             max_t_;
  std::vector<GF> c_;
};

auto phi_quantity(TgrsSpec const &spec, Subset const &cols) -> GF;

struct Verdict
{
  bool                  holds = false;
  std::optional<Subset> witness; // first (lexicographic) counterexample
};

// MDS via the twist criterion: every k-subset has a nonzero Phi quantity.
auto is_mds_phi(TgrsSpec const &spec, unsigned workers = 1) -> Verdict;
// eta in Phi: is_mds_phi and eta != 0.
auto in_phi(TgrsSpec const &spec, unsigned workers = 1) -> bool;
// MDS via all k x k minors of a generator matrix.
auto is_mds_minors(MatGF const &g, unsigned workers = 1) -> Verdict;

struct AmdsVerdict
{
  bool                  holds = false;
  std::optional<Subset> dependent_columns; // k-subset with vanishing Phi quantity
  std::optional<Subset> rank_deficient;    // (k+1)-subset whose columns have rank < k
};

// AMDS iff some k-subset has vanishing Phi quantity and every (k+1)-subset
// contains a k-subset whose quantity does not vanish.
auto is_amds(TgrsSpec const &spec, unsigned workers = 1) -> AmdsVerdict;

inline constexpr int kDefaultDistanceCap = 24;

// Smallest number of linearly dependent columns of a full-row-rank parity
// check matrix. ResourceLimit when n > cap_n.
auto min_distance(MatGF const &h, int cap_n = kDefaultDistanceCap, unsigned workers = 1) -> int;

// n - rank(G stacked on H). UsageError naming the failed precondition.
auto hull_dimension(MatGF const &g, MatGF const &h) -> int;

struct CodeReport
{
  int                   n             = 0;
  int                   k             = 0;
  bool                  is_mds        = false;
  bool                  is_amds       = false;
  bool                  is_lcd        = false;
  int                   hull_dim      = 0;
  bool                  boundary_hook = false;
  std::optional<int>    min_distance;
  std::optional<bool>   distance_consistent;
  std::optional<Subset> mds_witness;
  std::optional<Subset> amds_dependent;
  std::optional<Subset> amds_rank_deficient;

  // "[n,k,d]" when the distance is known, else "[n,k]".
  auto parameters() const -> std::string;
  friend auto operator==(CodeReport const &, CodeReport const &) -> bool = default;
};

struct ClassifyOptions
{
  bool     want_distance = true;
  int      distance_cap  = kDefaultDistanceCap;
  unsigned workers       = 1;
};

auto classify(TgrsSpec const &spec, ClassifyOptions const &opts = {}) -> CodeReport;

// TGRS_WORKERS, 0 or unset meaning hardware concurrency.
auto default_workers() -> unsigned;

} // namespace tgrs
