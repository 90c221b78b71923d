#include "tgrs/lcdgen.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "tgrs/poly.hpp"
#include "tgrs/symm.hpp"

namespace tgrs {

namespace {

// Fields shared by both parameter classes, after k is resolved.
struct Common
{
  FieldRef                field;
  int                     n, k, h, l;
  GF                      lambda;
  std::vector<GF>         eta;
  std::vector<GF>         v_head;
  std::vector<int>        v_tail_signs;
  std::vector<GF>         alpha_order;
};

void require(bool ok, std::string const &clause, std::string const &detail)
{
  if (!ok) { throw ConstructionError("hypothesis '" + clause + "' fails: " + detail); }
}

auto assemble_alpha(Common const &c, std::vector<GF> const &roots) -> std::vector<GF>
{
  auto const &order = c.alpha_order;
  auto        is_root = [&](GF const &x) { return std::binary_search(roots.begin(), roots.end(), x); };
  for (auto const &x : order) {
    require(is_root(x), "alpha are the roots of x^n - lambda", x.to_string() + " is not a root");
  }
  std::set<GF> seen(order.begin(), order.end());
  require(seen.size() == order.size(), "alpha pairwise distinct", "alpha_order repeats a root");
  if (order.empty()) { return roots; }
  if (static_cast<int>(order.size()) == c.n) { return order; }
  require(static_cast<int>(order.size()) == c.k - 1, "alpha_order length",
          "expected k - 1 = " + std::to_string(c.k - 1) + " or n = " + std::to_string(c.n) + " entries, got " +
            std::to_string(order.size()));
  std::vector<GF> alpha = order;
  for (auto const &x : roots) {
    if (!seen.contains(x)) { alpha.push_back(x); }
  }
  return alpha;
}

auto item(std::string condition, bool holds, std::string evidence) -> VerificationItem
{
  return VerificationItem{std::move(condition), holds, std::move(evidence)};
}

// Hypotheses shared by both classes; returns (spec, r, record).
auto build_common(Common c, std::vector<VerificationItem> record) -> Construction
{
  require(c.field != nullptr, "field", "missing");
  auto const q = c.field->order();
  require(q >= 5, "q >= 5", "q = " + std::to_string(q) + " leaves no element outside {-1, 0, 1}");
  require(c.n >= 1 && (q - 1) % static_cast<std::uint64_t>(c.n) == 0, "n | q-1",
          "n = " + std::to_string(c.n) + ", q - 1 = " + std::to_string(q - 1));
  require(c.lambda.bound() && !c.lambda.is_zero(), "lambda in F_q^*", "lambda must be a nonzero field element");
  c.lambda          = c.lambda.in(c.field);
  auto const ord    = mult_order(c.lambda);
  auto const cofact = (q - 1) / static_cast<std::uint64_t>(c.n);
  require(cofact % ord == 0, "ord(lambda) | (q-1)/n",
          "ord(lambda) = " + std::to_string(ord) + ", (q - 1)/n = " + std::to_string(cofact));
  require(c.h >= 1 && c.h <= c.k - 1, "1 <= h <= k-1", "h = " + std::to_string(c.h) + ", k = " + std::to_string(c.k));
  require(c.l >= 0 && c.l <= c.n - c.k - 1, "l <= n-k-1",
          "l = " + std::to_string(c.l) + ", n - k - 1 = " + std::to_string(c.n - c.k - 1));
  require(static_cast<int>(c.eta.size()) == c.l + 1, "|eta| = l+1",
          "got " + std::to_string(c.eta.size()) + " entries, l = " + std::to_string(c.l));

  require(static_cast<int>(c.v_head.size()) == c.k - 1, "v_i not in {-1,0,1} for i <= k-1",
          "expected " + std::to_string(c.k - 1) + " head entries, got " + std::to_string(c.v_head.size()));
  GF const one = c.field->one();
  for (std::size_t i = 0; i < c.v_head.size(); ++i) {
    GF const x = c.v_head[i].in(c.field);
    require(!x.is_zero() && x != one && x != -one, "v_i not in {-1,0,1} for i <= k-1",
            "v_" + std::to_string(i + 1) + " = " + x.to_string());
  }
  require(static_cast<int>(c.v_tail_signs.size()) == c.n - c.k + 1, "v_i in {1,-1} for i >= k",
          "expected " + std::to_string(c.n - c.k + 1) + " tail signs, got " + std::to_string(c.v_tail_signs.size()));
  for (std::size_t i = 0; i < c.v_tail_signs.size(); ++i) {
    require(c.v_tail_signs[i] == 1 || c.v_tail_signs[i] == -1, "v_i in {1,-1} for i >= k",
            "sign " + std::to_string(c.v_tail_signs[i]) + " at position " + std::to_string(c.k + static_cast<int>(i)));
  }

  auto const roots = roots_of_xn_minus_lambda(static_cast<std::uint64_t>(c.n), c.lambda);
  for (auto &x : c.alpha_order) { x = x.in(c.field); }
  auto alpha = assemble_alpha(c, roots);

  std::vector<GF> v;
  for (auto const &x : c.v_head) { v.push_back(x.in(c.field)); }
  for (auto s : c.v_tail_signs) { v.push_back(s == 1 ? one : -one); }

  record.insert(record.end(),
                {item("n | q-1", true, "q - 1 = " + std::to_string(q - 1) + ", n = " + std::to_string(c.n)),
                 item("ord(lambda) | (q-1)/n", true,
                      "ord(lambda) = " + std::to_string(ord) + ", (q - 1)/n = " + std::to_string(cofact)),
                 item("1 <= h <= k-1", true, "h = " + std::to_string(c.h) + ", k = " + std::to_string(c.k)),
                 item("l <= n-k-1", true, "l = " + std::to_string(c.l)),
                 item("v_i not in {-1,0,1} for i <= k-1", true, std::to_string(c.k - 1) + " entries checked"),
                 item("v_i in {1,-1} for i >= k", true, std::to_string(c.n - c.k + 1) + " entries checked"),
                 item("alpha are the roots of x^n - lambda", true, std::to_string(c.n) + " distinct roots")});

  std::vector<GF> head(alpha.begin(), alpha.begin() + (c.k - 1));
  std::vector<GF> eta;
  for (auto const &x : c.eta) { eta.push_back(x.in(c.field)); }
  GF const r = r_coefficient(c.k, c.h, eta, head);
  record.push_back(item("r_{h-1} != 0", !r.is_zero(), "r_{h-1} = " + r.to_string()));

  TgrsSpec spec(c.field, c.n, c.k, c.l, c.h, std::move(alpha), std::move(v), std::move(eta));
  return Construction{std::move(spec), r, std::nullopt, !r.is_zero(), std::move(record)};
}

} // namespace

auto r_coefficient(int k, int h, std::vector<GF> const &eta, std::vector<GF> const &alpha_head) -> GF
{
  if (alpha_head.empty()) { throw UsageError("r_coefficient: alpha_head must be nonempty"); }
  if (static_cast<int>(alpha_head.size()) != k - 1) { throw UsageError("r_coefficient: alpha_head needs k - 1 points"); }
  if (h < 1) { throw UsageError("r_coefficient: h must be >= 1"); }
  auto const     *f = alpha_head.front().field();
  std::vector<GF> q(static_cast<std::size_t>(std::max(h, k + static_cast<int>(eta.size()) - 1)), f->zero());
  q[static_cast<std::size_t>(h - 1)] += f->one();
  for (std::size_t t = 0; t < eta.size(); ++t) { q[static_cast<std::size_t>(k) + t - 1] += eta[t].in(f); }
  auto const g         = from_roots(f, alpha_head);
  auto const [quo, rem] = divmod(Poly(f, std::move(q)), g);
  return rem.coeff(static_cast<std::size_t>(h - 1));
}

auto quadratic_twist_sum(std::vector<GF> const &eta, int m_gap) -> GF
{
  auto const l = static_cast<int>(eta.size()) - 1;
  if (eta.empty()) { throw UsageError("quadratic_twist_sum: empty eta"); }
  if (m_gap < 0 || m_gap > l) { throw UsageError("quadratic_twist_sum: m outside 0 <= m <= l"); }
  GF acc = eta.front() * GF(0);
  for (int t = m_gap; t <= l; ++t) { acc += eta[static_cast<std::size_t>(t)] * eta[static_cast<std::size_t>(l + m_gap - t)]; }
  return acc;
}

auto build_class1(Class1Params const &p) -> Construction
{
  require(p.k >= 2 && 2 * p.k <= p.n - 2 * p.l - 1, "2 <= k <= (n-2l-1)/2",
          "k = " + std::to_string(p.k) + ", n = " + std::to_string(p.n) + ", l = " + std::to_string(p.l));
  std::vector<VerificationItem> record{item("2 <= k <= (n-2l-1)/2", true,
                                            "k = " + std::to_string(p.k) + ", (n-2l-1)/2 = " +
                                              std::to_string((p.n - 2 * p.l - 1) / 2))};
  return build_common(Common{p.field, p.n, p.k, p.h, p.l, p.lambda, p.eta, p.v_head, p.v_tail_signs, p.alpha_order},
                      std::move(record));
}

auto build_class2(Class2Params const &p) -> Construction
{
  require(p.m_gap >= 0 && p.m_gap <= p.l, "0 <= m <= l",
          "m = " + std::to_string(p.m_gap) + ", l = " + std::to_string(p.l));
  require((p.n - p.l - p.m_gap) % 2 == 0, "k = (n-l-m)/2", "n - l - m = " + std::to_string(p.n - p.l - p.m_gap) + " is odd");
  int const k = p.k();
  require(k >= 2, "k = (n-l-m)/2 >= 2", "k = " + std::to_string(k));
  std::vector<VerificationItem> record{item("0 <= m <= l", true, "m = " + std::to_string(p.m_gap)),
                                       item("k = (n-l-m)/2 >= 2", true, "k = " + std::to_string(k))};
  auto out = build_common(Common{p.field, p.n, k, p.h, p.l, p.lambda, p.eta, p.v_head, p.v_tail_signs, p.alpha_order},
                          std::move(record));

  auto const &spec  = out.spec;
  GF const    quad  = quadratic_twist_sum(spec.eta(), p.m_gap);
  // the same sum through Psi_s, which equals eta_s on these points
  SymContext const ctx(spec.alpha(), spec.n() + spec.l());
  auto const       psi = ctx.psi_values(spec.eta());
  GF               via_psi = spec.field()->zero();
  for (int t = p.m_gap; t <= p.l; ++t) {
    via_psi += spec.eta()[static_cast<std::size_t>(t)] * psi[static_cast<std::size_t>(p.l + p.m_gap - t)];
  }
  out.record.push_back(item("sum_{t=m}^{l} eta_t eta_{l+m-t} = 0", quad.is_zero(), "sum = " + quad.to_string()));
  out.record.push_back(item("sum_{t=m}^{l} eta_t Psi_{l+m-t} equals the eta form", via_psi == quad,
                            "Psi form = " + via_psi.to_string()));
  out.quadratic  = quad;
  out.applicable = out.applicable && quad.is_zero();
  return out;
}

auto build(ConstructionParams const &params) -> Construction
{
  return std::visit(
    [](auto const &p) -> Construction {
      if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Class1Params>) {
        return build_class1(p);
      } else {
        return build_class2(p);
      }
    },
    params);
}

namespace {

auto with_eta(ConstructionParams params, std::vector<GF> eta) -> ConstructionParams
{
  std::visit([&](auto &p) { p.eta = std::move(eta); }, params);
  return params;
}

auto template_field(ConstructionParams const &params) -> FieldRef
{
  return std::visit([](auto const &p) { return p.field; }, params);
}

auto template_l(ConstructionParams const &params) -> int
{
  return std::visit([](auto const &p) { return p.l; }, params);
}

} // namespace

auto search_eta(ConstructionParams const &tmpl, SearchOptions const &opts) -> std::vector<SearchHit>
{
  if (opts.budget == 0) { throw UsageError("search_eta: budget must be positive"); }
  auto const *f = template_field(tmpl);
  if (!f) { throw ConstructionError("search template has no field"); }
  auto const l    = template_l(tmpl);
  auto const q    = f->order();
  auto const dims = static_cast<std::size_t>(l) + 1;

  // q^{l+1}, saturating
  std::uint64_t space = 1;
  bool          huge  = false;
  for (std::size_t i = 0; i < dims; ++i) {
    if (space > std::numeric_limits<std::uint64_t>::max() / q) {
      huge = true;
      break;
    }
    space *= q;
  }
  bool exhaustive = opts.strategy == SearchStrategy::exhaustive ||
                    (opts.strategy == SearchStrategy::automatic && !huge && space <= opts.budget);
  if (opts.strategy == SearchStrategy::exhaustive && (huge || space > opts.budget)) {
    throw ResourceLimit("search_eta: q^(l+1) exceeds the budget for exhaustive search");
  }

  std::vector<std::vector<GF>> candidates;
  if (exhaustive) {
    candidates.reserve(space);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      std::vector<GF> eta(dims, f->zero());
      auto            rest = idx;
      for (auto i = dims; i-- > 0;) {
        eta[i] = f->element(static_cast<Rep>(rest % q));
        rest /= q;
      }
      candidates.push_back(std::move(eta));
    }
  } else {
    std::mt19937_64                              rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> coord(0, q - 1);
    std::set<std::vector<GF>>                    drawn;
    for (std::uint64_t i = 0; i < opts.budget; ++i) {
      std::vector<GF> eta;
      for (std::size_t j = 0; j < dims; ++j) { eta.push_back(f->element(static_cast<Rep>(coord(rng)))); }
      drawn.insert(std::move(eta));
    }
    candidates.assign(drawn.begin(), drawn.end());
  }

  // surface parameter errors once, independent of eta
  build(with_eta(tmpl, std::vector<GF>(dims, f->one())));

  auto const check = [&](std::vector<GF> const &eta) -> std::optional<SearchHit> {
    if (std::all_of(eta.begin(), eta.end(), [](GF const &x) { return x.is_zero(); })) { return std::nullopt; }
    auto c = build(with_eta(tmpl, eta));
    if (!c.applicable) { return std::nullopt; }
    if (!is_mds_phi(c.spec).holds) { return std::nullopt; }
    ClassifyOptions co = opts.classify;
    co.workers         = 1;
    return SearchHit{eta, classify(c.spec, co)};
  };

  std::vector<SearchHit> hits;
  unsigned const         workers = std::max(1U, opts.workers);
  if (workers == 1) {
    for (auto const &eta : candidates) {
      if (auto hit = check(eta)) { hits.push_back(std::move(*hit)); }
    }
  } else {
    std::mutex               mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<SearchHit> local;
        for (std::size_t i = w; i < candidates.size(); i += workers) {
          if (auto hit = check(candidates[i])) { local.push_back(std::move(*hit)); }
        }
        std::lock_guard const lock(mutex);
        for (auto &h : local) { hits.push_back(std::move(h)); }
      });
    }
    for (auto &t : pool) { t.join(); }
  }
  std::sort(hits.begin(), hits.end(), [](SearchHit const &a, SearchHit const &b) { return a.eta < b.eta; });
  return hits;
}

} // namespace tgrs
