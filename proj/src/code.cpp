#include "tgrs/code.hpp"

#include <algorithm>
#include <string>

#include "tgrs/symm.hpp"

namespace tgrs {

namespace {

auto bind_all(std::vector<GF> xs, FieldRef f, char const *what) -> std::vector<GF>
{
  try {
    for (auto &x : xs) { x = x.in(f); }
  } catch (UsageError const &e) {
    throw ConstructionError(std::string(what) + ": " + e.what());
  }
  return xs;
}

void check_points(std::vector<GF> const &alpha, std::vector<GF> const &v, int n)
{
  if (static_cast<int>(alpha.size()) != n) {
    throw ConstructionError("alpha has " + std::to_string(alpha.size()) + " entries, expected n = " + std::to_string(n));
  }
  if (static_cast<int>(v.size()) != n) {
    throw ConstructionError("v has " + std::to_string(v.size()) + " entries, expected n = " + std::to_string(n));
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (alpha[i] == alpha[j]) {
        throw ConstructionError("alpha entries " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are equal (" + alpha[i].to_string() + ")");
      }
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) { throw ConstructionError("v entry " + std::to_string(i + 1) + " is zero"); }
  }
}

// sum_{t} b_t x^{k+t} evaluated at x, over the given twist exponents.
auto twist_tail(GF const &x, int k, std::vector<int> const &twists, auto coeff) -> GF
{
  GF acc = x.field()->zero();
  for (auto t : twists) { acc += coeff(t) * x.pow(static_cast<std::uint64_t>(k + t)); }
  return acc;
}

} // namespace

TgrsSpec::TgrsSpec(FieldRef field, int n, int k, int l, int h, std::vector<GF> alpha, std::vector<GF> v,
                   std::vector<GF> eta)
  : field_(field)
  , n_(n)
  , k_(k)
  , l_(l)
  , h_(h)
  , alpha_(bind_all(std::move(alpha), field, "alpha"))
  , v_(bind_all(std::move(v), field, "v"))
  , eta_(bind_all(std::move(eta), field, "eta"))
{
  if (!field_) { throw ConstructionError("missing field"); }
  if (k_ < 2 || k_ > n_) {
    throw ConstructionError("dimension k = " + std::to_string(k_) + " outside 2 <= k <= n = " + std::to_string(n_));
  }
  if (l_ < 0 || l_ > n_ - k_ - 1) {
    throw ConstructionError("twist range l = " + std::to_string(l_) + " violates L = {0..l} subset of {0,...,n-k-1}" +
                            " (need 0 <= l <= " + std::to_string(n_ - k_ - 1) + ")");
  }
  if (h_ < 1 || h_ > k_ - 1) {
    throw ConstructionError("hook h = " + std::to_string(h_) + " outside 1 <= h <= k-1 = " + std::to_string(k_ - 1));
  }
  check_points(alpha_, v_, n_);
  if (static_cast<int>(eta_.size()) != l_ + 1) {
    throw ConstructionError("eta has " + std::to_string(eta_.size()) + " entries, expected l + 1 = " +
                            std::to_string(l_ + 1));
  }
}

auto TgrsSpec::with_eta(std::vector<GF> eta) const -> TgrsSpec
{
  return TgrsSpec(field_, n_, k_, l_, h_, alpha_, v_, std::move(eta));
}

GeneralTwistSpec::GeneralTwistSpec(FieldRef field, int n, int k, std::vector<int> twists, std::vector<int> hooks,
                                   MatGF b, std::vector<GF> alpha, std::vector<GF> v)
  : field_(field)
  , n_(n)
  , k_(k)
  , twists_(std::move(twists))
  , hooks_(std::move(hooks))
  , b_(std::move(b))
  , alpha_(bind_all(std::move(alpha), field, "alpha"))
  , v_(bind_all(std::move(v), field, "v"))
{
  if (!field_) { throw ConstructionError("missing field"); }
  if (k_ < 1 || k_ > n_) { throw ConstructionError("dimension k outside 1 <= k <= n"); }
  check_points(alpha_, v_, n_);
  std::sort(twists_.begin(), twists_.end());
  std::sort(hooks_.begin(), hooks_.end());
  for (auto t : twists_) {
    if (t < 0 || t > n_ - k_ - 1) { throw ConstructionError("twist " + std::to_string(t) + " not in {0,...,n-k-1}"); }
  }
  for (auto h : hooks_) {
    if (h < 0 || h > k_ - 1) { throw ConstructionError("hook " + std::to_string(h) + " not in {0,...,k-1}"); }
  }
  if (b_.rows() != k_ || b_.cols() != n_ - k_) {
    throw ConstructionError("B must be k x (n-k) = " + std::to_string(k_) + "x" + std::to_string(n_ - k_));
  }
  for (Index i = 0; i < b_.rows(); ++i) {
    bool const is_hook = std::binary_search(hooks_.begin(), hooks_.end(), static_cast<int>(i));
    for (Index j = 0; j < b_.cols(); ++j) {
      b_(i, j) = b_(i, j).in(field_);
      bool const is_twist = std::binary_search(twists_.begin(), twists_.end(), static_cast<int>(j));
      if (!b_(i, j).is_zero() && !(is_hook && is_twist)) {
        throw ConstructionError("B(" + std::to_string(i) + "," + std::to_string(j) + ") nonzero outside P x L");
      }
    }
  }
}

auto GeneralTwistSpec::from(TgrsSpec const &spec) -> GeneralTwistSpec
{
  auto const *f = spec.field();
  MatGF       b = MatGF::Constant(spec.k(), spec.n() - spec.k(), f->zero());
  std::vector<int> twists;
  for (int t = 0; t <= spec.l(); ++t) {
    twists.push_back(t);
    b(spec.h(), t) = spec.eta()[static_cast<std::size_t>(t)];
  }
  return GeneralTwistSpec(f, spec.n(), spec.k(), twists, {spec.h()}, b, spec.alpha(), spec.v());
}

auto generator_matrix(TgrsSpec const &spec) -> MatGF
{
  auto const n = spec.n();
  auto const k = spec.k();
  MatGF      g(k, n);
  std::vector<int> twists(static_cast<std::size_t>(spec.l()) + 1);
  for (int t = 0; t <= spec.l(); ++t) { twists[static_cast<std::size_t>(t)] = t; }
  for (int j = 0; j < n; ++j) {
    auto const &a  = spec.alpha()[static_cast<std::size_t>(j)];
    auto const &vj = spec.v()[static_cast<std::size_t>(j)];
    GF          p  = spec.field()->one();
    for (int i = 0; i < k; ++i) {
      GF entry = p;
      if (i == spec.h()) {
        entry += twist_tail(a, k, twists, [&](int t) { return spec.eta()[static_cast<std::size_t>(t)]; });
      }
      g(i, j) = vj * entry;
      p *= a;
    }
  }
  return g;
}

auto generator_matrix(GeneralTwistSpec const &spec) -> MatGF
{
  auto const n = spec.n();
  auto const k = spec.k();
  MatGF      g(k, n);
  for (int j = 0; j < n; ++j) {
    auto const &a  = spec.alpha()[static_cast<std::size_t>(j)];
    auto const &vj = spec.v()[static_cast<std::size_t>(j)];
    GF          p  = spec.field()->one();
    for (int i = 0; i < k; ++i) {
      GF entry = p;
      if (std::binary_search(spec.hooks().begin(), spec.hooks().end(), i)) {
        entry += twist_tail(a, k, spec.twists(), [&](int t) { return spec.b()(i, t); });
      }
      g(i, j) = vj * entry;
      p *= a;
    }
  }
  return g;
}

auto parity_check_matrix(TgrsSpec const &spec) -> MatGF
{
  auto const n = spec.n();
  auto const k = spec.k();
  auto const l = spec.l();
  SymContext ctx(spec.alpha(), n + l);
  auto const psi   = ctx.psi_values(spec.eta());
  auto const hooks = ctx.hook_weights(spec.h());
  auto const &u    = ctx.dual_coeffs();

  MatGF hm(n - k, n);
  for (int i = 0; i < n; ++i) {
    auto const idx   = static_cast<std::size_t>(i);
    GF const   scale = u[idx] / spec.v()[idx];
    GF         p     = spec.field()->one();
    for (int j = 0; j < n - k; ++j) {
      GF entry = p;
      if (j >= n - k - l - 1) { entry -= hooks.w_tilde[idx] * psi[static_cast<std::size_t>(n - k - 1 - j)]; }
      hm(j, i) = scale * entry;
      p *= spec.alpha()[idx];
    }
  }
  return hm;
}

auto encode(TgrsSpec const &spec, std::vector<GF> const &message) -> std::vector<GF>
{
  if (static_cast<int>(message.size()) != spec.k()) {
    throw UsageError("message has " + std::to_string(message.size()) + " symbols, expected k = " +
                     std::to_string(spec.k()));
  }
  auto const     *f = spec.field();
  std::vector<GF> out;
  out.reserve(static_cast<std::size_t>(spec.n()));
  GF const fh = message[static_cast<std::size_t>(spec.h())].in(f);
  for (int j = 0; j < spec.n(); ++j) {
    auto const &a   = spec.alpha()[static_cast<std::size_t>(j)];
    GF          acc = f->zero();
    for (auto it = message.rbegin(); it != message.rend(); ++it) { acc = acc * a + it->in(f); }
    GF tail = f->zero();
    for (int t = 0; t <= spec.l(); ++t) {
      tail += spec.eta()[static_cast<std::size_t>(t)] * a.pow(static_cast<std::uint64_t>(spec.k() + t));
    }
    out.push_back(spec.v()[static_cast<std::size_t>(j)] * (acc + fh * tail));
  }
  return out;
}

auto encode_general(GeneralTwistSpec const &spec, std::vector<GF> const &message) -> std::vector<GF>
{
  if (static_cast<int>(message.size()) != spec.k()) {
    throw UsageError("message has " + std::to_string(message.size()) + " symbols, expected k = " +
                     std::to_string(spec.k()));
  }
  auto const     *f = spec.field();
  std::vector<GF> out;
  for (int j = 0; j < spec.n(); ++j) {
    auto const &a   = spec.alpha()[static_cast<std::size_t>(j)];
    GF          acc = f->zero();
    for (auto it = message.rbegin(); it != message.rend(); ++it) { acc = acc * a + it->in(f); }
    for (auto i : spec.hooks()) {
      GF const fi = message[static_cast<std::size_t>(i)].in(f);
      acc += fi * twist_tail(a, spec.k(), spec.twists(), [&](int t) { return spec.b()(i, t); });
    }
    out.push_back(spec.v()[static_cast<std::size_t>(j)] * acc);
  }
  return out;
}

} // namespace tgrs
