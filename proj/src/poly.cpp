#include "tgrs/poly.hpp"

#include <algorithm>

namespace tgrs {

Poly::Poly(FieldRef field)
  : field_(field)
{
  if (!field_) { throw UsageError("polynomial needs a field"); }
}

Poly::Poly(FieldRef field, std::vector<GF> coeffs)
  : field_(field)
  , coeffs_(std::move(coeffs))
{
  if (!field_) { throw UsageError("polynomial needs a field"); }
  for (auto &c : coeffs_) { c = c.in(field_); }
  normalize();
}

auto Poly::monomial(FieldRef field, std::size_t degree, GF const &c) -> Poly
{
  std::vector<GF> cs(degree + 1, field->zero());
  cs[degree] = c;
  return Poly(field, std::move(cs));
}

auto Poly::constant(GF const &c) -> Poly { return Poly(c.field(), {c}); }

void Poly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back().is_zero()) { coeffs_.pop_back(); }
}

auto Poly::degree() const noexcept -> std::optional<std::size_t>
{
  if (coeffs_.empty()) { return std::nullopt; }
  return coeffs_.size() - 1;
}

auto Poly::leading() const -> GF
{
  if (coeffs_.empty()) { return field_->zero(); }
  return coeffs_.back();
}

auto Poly::coeff(std::size_t j) const -> GF { return j < coeffs_.size() ? coeffs_[j] : field_->zero(); }

auto Poly::operator()(GF const &x) const -> GF
{
  GF acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) { acc = acc * x + *it; }
  return acc;
}

auto operator+(Poly const &a, Poly const &b) -> Poly
{
  std::vector<GF> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) { out[i] = a.coeff(i) + b.coeff(i); }
  return Poly(a.field_, std::move(out));
}

auto operator-(Poly const &a, Poly const &b) -> Poly
{
  std::vector<GF> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) { out[i] = a.coeff(i) - b.coeff(i); }
  return Poly(a.field_, std::move(out));
}

auto operator*(Poly const &a, Poly const &b) -> Poly
{
  if (a.is_zero() || b.is_zero()) { return Poly(a.field_); }
  std::vector<GF> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) { out[i + j] += a.coeffs_[i] * b.coeffs_[j]; }
  }
  return Poly(a.field_, std::move(out));
}

auto operator*(GF const &c, Poly const &a) -> Poly
{
  std::vector<GF> out = a.coeffs_;
  for (auto &x : out) { x *= c; }
  return Poly(a.field_, std::move(out));
}

auto operator==(Poly const &a, Poly const &b) -> bool { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

auto divmod(Poly const &num, Poly const &den) -> std::pair<Poly, Poly>
{
  if (den.is_zero()) { throw DivisionByZero("polynomial division by zero"); }
  if (num.field() != den.field()) { throw UsageError("polynomials over different fields"); }
  auto const     *f  = num.field();
  auto const      dd = *den.degree();
  std::vector<GF> rem = num.coeffs();
  if (rem.size() <= dd) { return {Poly(f), num}; }
  std::vector<GF> quo(rem.size() - dd, f->zero());
  GF const        lead_inv = den.leading().inverse();
  for (auto k = rem.size(); k-- > dd;) {
    GF const c = rem[k] * lead_inv;
    if (c.is_zero()) { continue; }
    quo[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) { rem[k - dd + i] -= c * den.coeffs()[i]; }
  }
  rem.resize(dd);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

auto from_roots(FieldRef field, std::span<GF const> roots) -> Poly
{
  Poly acc = Poly::constant(field->one());
  for (auto const &r : roots) { acc = acc * Poly(field, {-r.in(field), field->one()}); }
  return acc;
}

} // namespace tgrs
