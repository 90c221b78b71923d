#pragma once

// Exact arithmetic in GF(p^m), q = p^m < 2^31.
//
// Fields are interned: `Field::get` returns a pointer into a process-wide
// registry that lives until exit, so elements can carry a plain pointer to
// their field and two fields compare equal iff the pointers do.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tgrs/errors.hpp"

namespace tgrs {

class Field;
class GF;

using FieldRef = Field const *;
using Rep      = std::uint32_t;

class Field
{
public:
  // `modulus` is monic of degree m, low degree first (m + 1 entries); it is
  // ignored (and may be empty) when m == 1. Throws ConstructionError when p
  // is not prime, the modulus is not irreducible, or q >= 2^31.
  static auto get(std::uint32_t p, std::uint32_t m = 1, std::vector<std::uint32_t> modulus = {}) -> FieldRef;

  auto p() const noexcept -> std::uint32_t { return p_; }
  auto m() const noexcept -> std::uint32_t { return m_; }
  auto order() const noexcept -> std::uint64_t { return q_; }
  auto modulus() const noexcept -> std::vector<std::uint32_t> const & { return modulus_; }
  auto is_prime_field() const noexcept -> bool { return m_ == 1; }
  auto name() const -> std::string;

  // Prime factors of q - 1, ascending, without multiplicity.
  auto group_order_factors() const noexcept -> std::vector<std::uint64_t> const & { return factors_; }

  auto zero() const -> GF;
  auto one() const -> GF;
  auto element(Rep rep) const -> GF;
  // n * 1 in this field; negative n allowed.
  auto from_int(std::int64_t n) const -> GF;
  // Coefficient vector over GF(p), low degree first, each entry reduced mod p.
  auto from_coeffs(std::span<std::int64_t const> coeffs) const -> GF;
  auto primitive_element() const -> GF;
  // All q elements in canonical order.
  auto elements() const -> std::vector<GF>;

  // Raw arithmetic on canonical representations.
  auto add(Rep a, Rep b) const -> Rep
  {
    if (m_ == 1) {
      std::uint64_t const s = std::uint64_t{a} + b;
      return static_cast<Rep>(s >= p_ ? s - p_ : s);
    }
    return add_ext(a, b);
  }
  auto neg(Rep a) const -> Rep
  {
    if (m_ == 1) { return a == 0 ? 0 : p_ - a; }
    return neg_ext(a);
  }
  auto sub(Rep a, Rep b) const -> Rep { return add(a, neg(b)); }
  auto mul(Rep a, Rep b) const -> Rep
  {
    if (m_ == 1) { return static_cast<Rep>(std::uint64_t{a} * b % p_); }
    return mul_ext(a, b);
  }
  auto inv(Rep a) const -> Rep;
  auto pow(Rep a, std::uint64_t e) const -> Rep;
  auto embed(std::int64_t n) const -> Rep;

  auto digits(Rep a) const -> std::vector<std::uint32_t>;
  auto pack(std::span<std::uint32_t const> digits) const -> Rep;

  Field(Field const &)                     = delete;
  auto operator=(Field const &) -> Field & = delete;

private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  auto add_ext(Rep a, Rep b) const -> Rep;
  auto neg_ext(Rep a) const -> Rep;
  auto mul_ext(Rep a, Rep b) const -> Rep;
  auto find_primitive() const -> Rep;

  std::uint32_t              p_;
  std::uint32_t              m_;
  std::uint64_t              q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> factors_;
  Rep                        primitive_ = 0;
};

// An element of a finite field.
//
// A default-constructed or integer-constructed GF is "unbound": it stands for
// the integer n * 1 and adopts the field of whatever bound element it meets.
// This lets Eigen build Scalar(0) / Scalar(1) without knowing the field.
class GF
{
public:
  constexpr GF() noexcept = default;
  constexpr GF(std::int64_t n) noexcept // NOLINT(google-explicit-constructor)
    : value_(n)
  {
  }
  GF(FieldRef field, Rep rep);

  auto field() const noexcept -> FieldRef { return field_; }
  auto bound() const noexcept -> bool { return field_ != nullptr; }
  // Canonical residue. Throws UsageError on an unbound element.
  auto rep() const -> Rep;
  auto is_zero() const noexcept -> bool { return value_ == 0; }
  auto is_one() const -> bool;

  // Bound copy in `field` (no-op when already bound to it).
  auto in(FieldRef field) const -> GF;

  auto inverse() const -> GF;
  auto pow(std::uint64_t e) const -> GF;
  // Coefficients over GF(p), low degree first (one entry for prime fields).
  auto coeffs() const -> std::vector<std::uint32_t>;
  auto to_string() const -> std::string;

  friend auto operator+(GF const &a, GF const &b) -> GF;
  friend auto operator-(GF const &a, GF const &b) -> GF;
  friend auto operator*(GF const &a, GF const &b) -> GF;
  friend auto operator/(GF const &a, GF const &b) -> GF;
  friend auto operator-(GF const &a) -> GF;
  auto operator+=(GF const &b) -> GF & { return *this = *this + b; }
  auto operator-=(GF const &b) -> GF & { return *this = *this - b; }
  auto operator*=(GF const &b) -> GF & { return *this = *this * b; }
  auto operator/=(GF const &b) -> GF & { return *this = *this / b; }

  friend auto operator==(GF const &a, GF const &b) -> bool;
  // Canonical order: ascending packed representation.
  friend auto operator<(GF const &a, GF const &b) -> bool;

private:
  static auto common(GF const &a, GF const &b) -> FieldRef;
  auto        rep_in(FieldRef f) const -> Rep { return field_ ? static_cast<Rep>(value_) : f->embed(value_); }

  FieldRef     field_ = nullptr;
  std::int64_t value_ = 0;
};

auto operator<<(std::ostream &os, GF const &x) -> std::ostream &;

inline auto is_zero(GF const &x) noexcept -> bool { return x.is_zero(); }

// Least t >= 1 with a^t = 1. Throws DomainError for a = 0.
auto mult_order(GF const &a) -> std::uint64_t;

// All n distinct roots of x^n - lambda, ascending. Requires n | q - 1 and
// ord(lambda) | (q - 1) / n; throws ConstructionError naming the failed one.
auto roots_of_xn_minus_lambda(std::uint64_t n, GF const &lambda) -> std::vector<GF>;

auto is_prime(std::uint64_t n) -> bool;
auto prime_factors(std::uint64_t n) -> std::vector<std::uint64_t>;

// Rabin's test over GF(p). `f` is monic, low degree first.
auto is_irreducible(std::span<std::uint32_t const> f, std::uint32_t p) -> bool;

} // namespace tgrs

namespace Eigen {

template <> struct NumTraits<tgrs::GF> : GenericNumTraits<tgrs::GF>
{
  using Real       = tgrs::GF;
  using NonInteger = tgrs::GF;
  using Literal    = tgrs::GF;
  using Nested     = tgrs::GF;
  enum
  {
    IsComplex             = 0,
    IsInteger             = 0,
    IsSigned              = 1,
    RequireInitialization = 1,
    ReadCost              = 1,
    AddCost               = 2,
    MulCost               = 4
  };
  static inline auto epsilon() -> Real { return Real(0); }
  static inline auto dummy_precision() -> Real { return Real(0); }
  static inline auto digits10() -> int { return 0; }
  static inline auto highest() -> Real { return Real(0); }
  static inline auto lowest() -> Real { return Real(0); }
};

} // namespace Eigen
