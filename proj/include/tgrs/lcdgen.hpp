#pragma once

// Constructions of LCD codes from C_h with alpha the n roots of x^n - lambda.
//
// Class 1 needs 2 <= k <= (n - 2l - 1)/2; class 2 fixes k = (n - l - m)/2 and
// additionally needs sum_{t=m}^{l} eta_t eta_{l+m-t} = 0. Both are sufficient
// conditions keyed on r_{h-1} = Coeff_{h-1}(q(x) mod g(x)) with
//   q(x) = x^{h-1} + sum_t eta_t x^{k+t-1},  g(x) = prod_{i<k} (x - alpha_i).
// When r_{h-1} (or the quadratic sum) rules the theorem out, the spec is still
// built and flagged inapplicable so the caller can test LCD directly.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgrs/classify.hpp"
#include "tgrs/code.hpp"

namespace tgrs {

struct VerificationItem
{
  std::string condition;
  bool        holds = false;
  std::string evidence;

  friend auto operator==(VerificationItem const &, VerificationItem const &) -> bool = default;
};

struct Class1Params
{
  FieldRef         field = nullptr;
  int              n     = 0;
  int              k     = 0;
  int              h     = 0;
  int              l     = 0;
  GF               lambda;
  std::vector<GF>  eta;
  std::vector<GF>  v_head;       // k - 1 entries outside {-1, 0, 1}
  std::vector<int> v_tail_signs; // n - k + 1 entries in {+1, -1}
  // Empty: roots ascending. k - 1 entries: those roots first, the rest
  // ascending. n entries: the full order (a permutation of the roots).
  std::vector<GF> alpha_order;
};

struct Class2Params
{
  FieldRef         field = nullptr;
  int              n     = 0;
  int              h     = 0;
  int              l     = 0;
  int              m_gap = 0;
  GF               lambda;
  std::vector<GF>  eta;
  std::vector<GF>  v_head;
  std::vector<int> v_tail_signs;
  std::vector<GF>  alpha_order;

  // (n - l - m) / 2; only meaningful when n - l - m is even.
  auto k() const noexcept -> int { return (n - l - m_gap) / 2; }
};

struct Construction
{
  TgrsSpec                      spec;
  GF                            r;          // r_{h-1}
  std::optional<GF>             quadratic;  // class 2 only
  bool                          applicable; // every hypothesis of the theorem holds
  std::vector<VerificationItem> record;
};

auto r_coefficient(int k, int h, std::vector<GF> const &eta, std::vector<GF> const &alpha_head) -> GF;

// sum_{t=m}^{l} eta_t eta_{l+m-t}, l = eta.size() - 1.
auto quadratic_twist_sum(std::vector<GF> const &eta, int m_gap) -> GF;

auto build_class1(Class1Params const &params) -> Construction;
auto build_class2(Class2Params const &params) -> Construction;

using ConstructionParams = std::variant<Class1Params, Class2Params>;

auto build(ConstructionParams const &params) -> Construction;

enum class SearchStrategy
{
  automatic, // exhaustive when q^{l+1} <= budget, else randomized
  exhaustive,
  randomized
};

struct SearchOptions
{
  std::uint64_t   budget   = 0;
  std::uint64_t   seed     = 0;
  SearchStrategy  strategy = SearchStrategy::automatic;
  ClassifyOptions classify;
  unsigned        workers = 1;
};

struct SearchHit
{
  std::vector<GF> eta;
  CodeReport      report;
};

// Twist vectors (template eta ignored) with r_{h-1} != 0, the class-2
// quadratic condition where it applies, and eta in Phi. Hits come back in
// lexicographic eta order.
auto search_eta(ConstructionParams const &tmpl, SearchOptions const &opts) -> std::vector<SearchHit>;

} // namespace tgrs
