#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

// Dense univariate polynomial over a finite field, low degree first.
// The zero polynomial stores no coefficients and has no degree.
class Poly
{
public:
  explicit Poly(FieldRef field);
  Poly(FieldRef field, std::vector<GF> coeffs);

  static auto monomial(FieldRef field, std::size_t degree, GF const &c) -> Poly;
  static auto constant(GF const &c) -> Poly;

  auto field() const noexcept -> FieldRef { return field_; }
  auto coeffs() const noexcept -> std::vector<GF> const & { return coeffs_; }
  auto is_zero() const noexcept -> bool { return coeffs_.empty(); }
  // std::nullopt for the zero polynomial.
  auto degree() const noexcept -> std::optional<std::size_t>;
  auto leading() const -> GF;
  auto is_monic() const -> bool { return !is_zero() && leading().is_one(); }

  // Coefficient of x^j; zero beyond the degree.
  auto coeff(std::size_t j) const -> GF;
  // Horner evaluation.
  auto operator()(GF const &x) const -> GF;

  friend auto operator+(Poly const &a, Poly const &b) -> Poly;
  friend auto operator-(Poly const &a, Poly const &b) -> Poly;
  friend auto operator*(Poly const &a, Poly const &b) -> Poly;
  friend auto operator*(GF const &c, Poly const &a) -> Poly;
  friend auto operator==(Poly const &a, Poly const &b) -> bool;

private:
  void normalize();

  FieldRef        field_;
  std::vector<GF> coeffs_;
};

// (quotient, remainder) with num = quotient * den + remainder and
// deg(remainder) < deg(den). Throws DivisionByZero when den = 0.
auto divmod(Poly const &num, Poly const &den) -> std::pair<Poly, Poly>;

// Monic prod (x - r) over the multiset of roots; constant 1 when empty.
auto from_roots(FieldRef field, std::span<GF const> roots) -> Poly;

inline auto coeff_of(Poly const &f, std::size_t j) -> GF { return f.coeff(j); }

} // namespace tgrs
