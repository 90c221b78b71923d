#include "tgrs/gf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace tgrs {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP &a)
{
  while (!a.empty() && a.back() == 0) { a.pop_back(); }
}

auto powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) -> std::uint64_t
{
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) { r = r * b % p; }
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

auto inv_mod_p(std::uint64_t a, std::uint64_t p) -> std::uint64_t { return powmod_u64(a, p - 2, p); }

auto poly_rem(PolyP a, PolyP const &b, std::uint64_t p) -> PolyP
{
  trim(a);
  auto const          db   = b.size() - 1;
  std::uint64_t const lead = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t const c     = a.back() * lead % p;
    auto const          shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) { a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p; }
    trim(a);
  }
  return a;
}

auto poly_mulmod(PolyP const &a, PolyP const &b, PolyP const &f, std::uint64_t p) -> PolyP
{
  if (a.empty() || b.empty()) { return {}; }
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) { r[i + j] = (r[i + j] + a[i] * b[j]) % p; }
  }
  return poly_rem(std::move(r), f, p);
}

auto poly_powmod(PolyP base, std::uint64_t e, PolyP const &f, std::uint64_t p) -> PolyP
{
  PolyP r{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) { r = poly_mulmod(r, base, f, p); }
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

auto poly_gcd(PolyP a, PolyP b, std::uint64_t p) -> PolyP
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b, p);
    a      = std::move(b);
    b      = std::move(r);
  }
  return a;
}

// x^(p^j) mod f by j successive p-th powers.
auto frobenius_power(std::uint64_t j, PolyP const &f, std::uint64_t p) -> PolyP
{
  PolyP x{0, 1};
  x = poly_rem(x, f, p);
  for (std::uint64_t i = 0; i < j; ++i) { x = poly_powmod(x, p, f, p); }
  return x;
}

auto sub_x(PolyP a, std::uint64_t p) -> PolyP
{
  if (a.size() < 2) { a.resize(2, 0); }
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

} // namespace

auto is_prime(std::uint64_t n) -> bool
{
  if (n < 2) { return false; }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) { return false; }
  }
  return true;
}

auto prime_factors(std::uint64_t n) -> std::vector<std::uint64_t>
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) { n /= d; }
    }
  }
  if (n > 1) { out.push_back(n); }
  return out;
}

auto is_irreducible(std::span<std::uint32_t const> f, std::uint32_t p) -> bool
{
  PolyP poly(f.begin(), f.end());
  trim(poly);
  if (poly.size() < 2) { return false; }
  auto const m = poly.size() - 1;
  if (m == 1) { return true; }
  if (sub_x(frobenius_power(m, poly, p), p).size() != 0) { return false; }
  for (auto d : prime_factors(m)) {
    auto g = poly_gcd(poly, sub_x(frobenius_power(m / d, poly, p), p), p);
    if (g.size() != 1) { return false; }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
  : p_(p)
  , m_(m)
  , q_(1)
  , modulus_(std::move(modulus))
{
  for (std::uint32_t i = 0; i < m_; ++i) { q_ *= p_; }
  factors_   = prime_factors(q_ - 1);
  primitive_ = find_primitive();
}

auto Field::get(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) -> FieldRef
{
  if (!is_prime(p)) { throw ConstructionError("field characteristic " + std::to_string(p) + " is not prime"); }
  if (m < 1) { throw ConstructionError("field extension degree must be >= 1"); }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q >= kMaxOrder) { throw ConstructionError("field order p^m must be < 2^31"); }
  }
  if (m == 1) {
    modulus.clear();
  } else {
    if (modulus.size() != m + 1) {
      throw ConstructionError("modulus must have m + 1 = " + std::to_string(m + 1) + " coefficients");
    }
    for (auto c : modulus) {
      if (c >= p) { throw ConstructionError("modulus coefficient " + std::to_string(c) + " is not reduced mod p"); }
    }
    if (modulus.back() != 1) { throw ConstructionError("modulus must be monic"); }
    if (!is_irreducible(modulus, p)) { throw ConstructionError("modulus is not irreducible over GF(p)"); }
  }

  using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
  static std::mutex                              mutex;
  static std::map<Key, std::unique_ptr<Field>>   registry;
  std::lock_guard const                          lock(mutex);
  Key                                            key{p, m, modulus};
  auto                                           it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(std::move(key), std::unique_ptr<Field>(new Field(p, m, std::move(modulus)))).first;
  }
  return it->second.get();
}

auto Field::name() const -> std::string
{
  if (m_ == 1) { return "GF(" + std::to_string(p_) + ")"; }
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

auto Field::zero() const -> GF { return GF(this, 0); }
auto Field::one() const -> GF { return GF(this, 1); }
auto Field::element(Rep rep) const -> GF { return GF(this, rep); }
auto Field::from_int(std::int64_t n) const -> GF { return GF(this, embed(n)); }
auto Field::primitive_element() const -> GF { return GF(this, primitive_); }

auto Field::from_coeffs(std::span<std::int64_t const> coeffs) const -> GF
{
  if (coeffs.size() > m_) { throw UsageError("too many coefficients for " + name()); }
  std::vector<std::uint32_t> d(m_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto const r = coeffs[i] % static_cast<std::int64_t>(p_);
    d[i]         = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  return GF(this, pack(d));
}

auto Field::elements() const -> std::vector<GF>
{
  std::vector<GF> out;
  out.reserve(q_);
  for (std::uint64_t r = 0; r < q_; ++r) { out.emplace_back(this, static_cast<Rep>(r)); }
  return out;
}

auto Field::embed(std::int64_t n) const -> Rep
{
  auto r = n % static_cast<std::int64_t>(p_);
  if (r < 0) { r += p_; }
  return static_cast<Rep>(r); // constants pack to the low digit
}

auto Field::digits(Rep a) const -> std::vector<std::uint32_t>
{
  std::vector<std::uint32_t> d(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

auto Field::pack(std::span<std::uint32_t const> d) const -> Rep
{
  std::uint64_t r = 0;
  for (auto i = d.size(); i-- > 0;) { r = r * p_ + d[i]; }
  return static_cast<Rep>(r);
}

auto Field::add_ext(Rep a, Rep b) const -> Rep
{
  auto da = digits(a);
  auto db = digits(b);
  for (std::uint32_t i = 0; i < m_; ++i) { da[i] = static_cast<std::uint32_t>((std::uint64_t{da[i]} + db[i]) % p_); }
  return pack(da);
}

auto Field::neg_ext(Rep a) const -> Rep
{
  auto d = digits(a);
  for (auto &x : d) { x = x == 0 ? 0 : p_ - x; }
  return pack(d);
}

auto Field::mul_ext(Rep a, Rep b) const -> Rep
{
  auto const da = digits(a);
  auto const db = digits(b);
  PolyP      prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) { prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_; }
  }
  // reduce by the monic modulus from the top
  for (auto k = prod.size(); k-- > m_;) {
    auto const c = prod[k];
    if (c == 0) { continue; }
    for (std::uint32_t i = 0; i <= m_; ++i) {
      auto &slot = prod[k - m_ + i];
      slot       = (slot + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) { out[i] = static_cast<std::uint32_t>(prod[i]); }
  return pack(out);
}

auto Field::inv(Rep a) const -> Rep
{
  if (a == 0) { throw DivisionByZero("inverse of zero in " + name()); }
  if (m_ == 1) { return static_cast<Rep>(powmod_u64(a, p_ - 2, p_)); }
  // extended Euclid on (modulus, a) over GF(p)
  PolyP r0(modulus_.begin(), modulus_.end());
  PolyP r1;
  for (auto d : digits(a)) { r1.push_back(d); }
  trim(r1);
  PolyP s0{}, s1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    PolyP               quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    PolyP               rem = r0;
    std::uint64_t const li  = inv_mod_p(r1.back(), p_);
    while (rem.size() >= r1.size()) {
      auto const c     = rem.back() * li % p_;
      auto const shift = rem.size() - r1.size();
      quo[shift]       = c;
      for (std::size_t i = 0; i < r1.size(); ++i) { rem[shift + i] = (rem[shift + i] + (p_ - c) * r1[i]) % p_; }
      trim(rem);
    }
    // s2 = s0 - quo * s1
    PolyP s2(std::max(s0.size(), quo.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) { s2[i] = s0[i]; }
    for (std::size_t i = 0; i < quo.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) { s2[i + j] = (s2[i + j] + (p_ - quo[i] * s1[j] % p_)) % p_; }
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible
  auto const                 scale = inv_mod_p(r0[0], p_);
  std::vector<std::uint32_t> out(m_, 0);
  for (std::size_t i = 0; i < s0.size() && i < m_; ++i) { out[i] = static_cast<std::uint32_t>(s0[i] * scale % p_); }
  return pack(out);
}

auto Field::pow(Rep a, std::uint64_t e) const -> Rep
{
  Rep r = 1;
  while (e) {
    if (e & 1) { r = mul(r, a); }
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

auto Field::find_primitive() const -> Rep
{
  if (q_ == 2) { return 1; }
  for (std::uint64_t c = 2; c < q_; ++c) {
    auto const g  = static_cast<Rep>(c);
    bool       ok = true;
    for (auto r : factors_) {
      if (pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) { return g; }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// GF

GF::GF(FieldRef field, Rep rep)
  : field_(field)
  , value_(rep)
{
  if (field == nullptr) { throw UsageError("null field"); }
  if (rep >= field->order()) { throw UsageError("element representation out of range for " + field->name()); }
}

auto GF::rep() const -> Rep
{
  if (!field_) { throw UsageError("unbound field element has no canonical representation"); }
  return static_cast<Rep>(value_);
}

auto GF::is_one() const -> bool { return field_ ? value_ == 1 : value_ == 1; }

auto GF::in(FieldRef f) const -> GF
{
  if (field_ == f) { return *this; }
  if (field_) { throw UsageError("element of " + field_->name() + " used in " + f->name()); }
  return GF(f, f->embed(value_));
}

auto GF::common(GF const &a, GF const &b) -> FieldRef
{
  if (a.field_ && b.field_ && a.field_ != b.field_) {
    throw UsageError("mismatched fields: " + a.field_->name() + " and " + b.field_->name());
  }
  return a.field_ ? a.field_ : b.field_;
}

auto operator+(GF const &a, GF const &b) -> GF
{
  if (auto f = GF::common(a, b)) { return GF(f, f->add(a.rep_in(f), b.rep_in(f))); }
  return GF(a.value_ + b.value_);
}

auto operator-(GF const &a, GF const &b) -> GF
{
  if (auto f = GF::common(a, b)) { return GF(f, f->sub(a.rep_in(f), b.rep_in(f))); }
  return GF(a.value_ - b.value_);
}

auto operator*(GF const &a, GF const &b) -> GF
{
  if (auto f = GF::common(a, b)) { return GF(f, f->mul(a.rep_in(f), b.rep_in(f))); }
  return GF(a.value_ * b.value_);
}

auto operator/(GF const &a, GF const &b) -> GF
{
  if (b.is_zero()) { throw DivisionByZero("division by zero"); }
  if (auto f = GF::common(a, b)) { return GF(f, f->mul(a.rep_in(f), f->inv(b.rep_in(f)))); }
  if (b.value_ == 1 || b.value_ == -1) { return GF(a.value_ * b.value_); }
  throw UsageError("division of unbound integers");
}

auto operator-(GF const &a) -> GF
{
  if (a.field_) { return GF(a.field_, a.field_->neg(static_cast<Rep>(a.value_))); }
  return GF(-a.value_);
}

auto operator==(GF const &a, GF const &b) -> bool
{
  if (auto f = GF::common(a, b)) { return a.rep_in(f) == b.rep_in(f); }
  return a.value_ == b.value_;
}

auto operator<(GF const &a, GF const &b) -> bool
{
  if (auto f = GF::common(a, b)) { return a.rep_in(f) < b.rep_in(f); }
  return a.value_ < b.value_;
}

auto GF::inverse() const -> GF
{
  if (is_zero()) { throw DivisionByZero("inverse of zero"); }
  if (!field_) { return GF(1) / *this; }
  return GF(field_, field_->inv(static_cast<Rep>(value_)));
}

auto GF::pow(std::uint64_t e) const -> GF
{
  if (!field_) { throw UsageError("pow on unbound element"); }
  return GF(field_, field_->pow(static_cast<Rep>(value_), e));
}

auto GF::coeffs() const -> std::vector<std::uint32_t> { return field_->digits(rep()); }

auto GF::to_string() const -> std::string
{
  if (!field_ || field_->is_prime_field()) { return std::to_string(value_); }
  std::ostringstream os;
  os << '[';
  auto const d = coeffs();
  for (std::size_t i = 0; i < d.size(); ++i) { os << (i ? "," : "") << d[i]; }
  os << ']';
  return os.str();
}

auto operator<<(std::ostream &os, GF const &x) -> std::ostream & { return os << x.to_string(); }

// ---------------------------------------------------------------------------

auto mult_order(GF const &a) -> std::uint64_t
{
  if (!a.bound()) { throw UsageError("mult_order needs a bound element"); }
  if (a.is_zero()) { throw DomainError("multiplicative order of zero is undefined"); }
  auto const    *f = a.field();
  std::uint64_t  t = f->order() - 1;
  for (auto r : f->group_order_factors()) {
    while (t % r == 0 && a.pow(t / r).is_one()) { t /= r; }
  }
  return t;
}

namespace {

// Baby-step giant-step: e with g^e = target, g of order N.
auto discrete_log(GF const &g, GF const &target, std::uint64_t N) -> std::uint64_t
{
  auto const                         step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(N))));
  std::unordered_map<Rep, std::uint64_t> baby;
  baby.reserve(step * 2);
  GF cur = g.field()->one();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(cur.rep(), j);
    cur *= g;
  }
  GF const giant = g.pow(N - (step % N)); // g^-step
  GF       y     = target;
  for (std::uint64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(y.rep()); it != baby.end()) { return (i * step + it->second) % N; }
    y *= giant;
  }
  throw DomainError("discrete logarithm not found");
}

} // namespace

auto roots_of_xn_minus_lambda(std::uint64_t n, GF const &lambda) -> std::vector<GF>
{
  if (!lambda.bound()) { throw UsageError("lambda must be a bound field element"); }
  if (lambda.is_zero()) { throw ConstructionError("lambda must be nonzero"); }
  auto const   *f = lambda.field();
  auto const    N = f->order() - 1;
  if (n == 0 || N % n != 0) {
    throw ConstructionError("n | q - 1 fails: n = " + std::to_string(n) + ", q - 1 = " + std::to_string(N));
  }
  auto const ord = mult_order(lambda);
  if ((N / n) % ord != 0) {
    throw ConstructionError("ord(lambda) | (q - 1)/n fails: ord(lambda) = " + std::to_string(ord) +
                            ", (q - 1)/n = " + std::to_string(N / n));
  }
  GF const g    = f->primitive_element();
  auto const e  = discrete_log(g, lambda, N); // n | e by the order condition
  GF const beta = g.pow(e / n);
  GF const zeta = g.pow(N / n);
  std::vector<GF> roots;
  roots.reserve(n);
  GF cur = beta;
  for (std::uint64_t j = 0; j < n; ++j) {
    roots.push_back(cur);
    cur *= zeta;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace tgrs
