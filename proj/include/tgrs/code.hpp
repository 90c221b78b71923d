#pragma once

#include <vector>

#include "tgrs/gf.hpp"
#include "tgrs/linalg.hpp"

namespace tgrs {

// Twisted GRS code with a single hook h and twists L = {0..l}:
//
//   f(x) = sum_{i<k} f_i x^i + f_h sum_{t=0}^{l} eta_t x^{k+t}
//   C_h  = { (v_1 f(alpha_1), ..., v_n f(alpha_n)) }
//
// Constructor validates 2 <= k <= n, 0 <= l <= n-k-1, 1 <= h <= k-1,
// distinct alpha, nonzero v, |eta| = l + 1; throws ConstructionError.
class TgrsSpec
{
public:
  TgrsSpec(FieldRef field, int n, int k, int l, int h, std::vector<GF> alpha, std::vector<GF> v, std::vector<GF> eta);

  auto field() const noexcept -> FieldRef { return field_; }
  auto n() const noexcept -> int { return n_; }
  auto k() const noexcept -> int { return k_; }
  auto l() const noexcept -> int { return l_; }
  auto h() const noexcept -> int { return h_; }
  auto alpha() const noexcept -> std::vector<GF> const & { return alpha_; }
  auto v() const noexcept -> std::vector<GF> const & { return v_; }
  auto eta() const noexcept -> std::vector<GF> const & { return eta_; }
  // h = k - 1 is the edge of the supported hook range.
  auto boundary_hook() const noexcept -> bool { return h_ == k_ - 1; }

  auto with_eta(std::vector<GF> eta) const -> TgrsSpec;

private:
  FieldRef        field_;
  int             n_, k_, l_, h_;
  std::vector<GF> alpha_, v_, eta_;
};

// General (L, P)-twisted code: f(x) = sum_{i<k} f_i x^i
//   + sum_{i in P} f_i sum_{j in L} b_{i,j} x^{k+j}
// with B a k x (n-k) matrix supported on P x L.
class GeneralTwistSpec
{
public:
  GeneralTwistSpec(FieldRef field, int n, int k, std::vector<int> twists, std::vector<int> hooks, MatGF b,
                   std::vector<GF> alpha, std::vector<GF> v);

  static auto from(TgrsSpec const &spec) -> GeneralTwistSpec;

  auto field() const noexcept -> FieldRef { return field_; }
  auto n() const noexcept -> int { return n_; }
  auto k() const noexcept -> int { return k_; }
  auto twists() const noexcept -> std::vector<int> const & { return twists_; }
  auto hooks() const noexcept -> std::vector<int> const & { return hooks_; }
  auto b() const noexcept -> MatGF const & { return b_; }
  auto alpha() const noexcept -> std::vector<GF> const & { return alpha_; }
  auto v() const noexcept -> std::vector<GF> const & { return v_; }

private:
  FieldRef         field_;
  int              n_, k_;
  std::vector<int> twists_, hooks_;
  MatGF            b_;
  std::vector<GF>  alpha_, v_;
};

// k x n; row i is (v_j alpha_j^i), row h carries the twist.
auto generator_matrix(TgrsSpec const &spec) -> MatGF;
auto generator_matrix(GeneralTwistSpec const &spec) -> MatGF;

// (n-k) x n closed-form parity-check matrix. Row j is (u_i/v_i) alpha_i^j,
// minus (u_i/v_i) w~_i Psi_{n-k-1-j} on the last l + 1 rows.
auto parity_check_matrix(TgrsSpec const &spec) -> MatGF;

auto encode(TgrsSpec const &spec, std::vector<GF> const &message) -> std::vector<GF>;
auto encode_general(GeneralTwistSpec const &spec, std::vector<GF> const &message) -> std::vector<GF>;

} // namespace tgrs
