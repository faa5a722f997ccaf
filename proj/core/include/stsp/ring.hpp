#pragma once

// Exact commutative rings with decidable equality.
//
// A ring is an immutable, interned descriptor (`Ring`); elements are
// `RingValue`s that carry a pointer to their descriptor plus a shared,
// immutable payload in canonical form.  Two descriptors with the same spec
// string are the same object, so descriptor equality is pointer equality.
//
// Supported towers:
//   Z                      integers
//   Z/m                    residues mod m (m >= 2)
//   R[x,y,...]             sparse polynomials, lex order, zero terms pruned
//   Loc(R,a)               fractions x/a^k with k minimal; a a certified
//                          non-zero-divisor of R
//   B(R,a)                 pairs (r, f) with r in R and f in t*R_a[t],
//                          multiplied as (rs, l(r)g + f l(s) + fg)

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "stsp/error.hpp"

namespace stsp {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

namespace detail {
struct Payload;
}

class RingValue {
 public:
  RingValue() = default;
  RingValue(RingPtr ring, std::shared_ptr<const detail::Payload> data)
      : ring_(std::move(ring)), data_(std::move(data)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const detail::Payload& payload() const { return *data_; }
  bool valid() const noexcept { return ring_ != nullptr && data_ != nullptr; }

  RingValue operator+(const RingValue& other) const;
  RingValue operator-(const RingValue& other) const;
  RingValue operator*(const RingValue& other) const;
  RingValue operator-() const;
  RingValue& operator+=(const RingValue& other) { return *this = *this + other; }
  RingValue& operator-=(const RingValue& other) { return *this = *this - other; }
  RingValue& operator*=(const RingValue& other) { return *this = *this * other; }

  /// Scalar shortcuts: the integer is mapped through the canonical Z -> R.
  RingValue operator*(long k) const;
  RingValue operator+(long k) const;

  RingValue pow(unsigned e) const;
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  friend bool operator==(const RingValue& x, const RingValue& y);
  friend bool operator!=(const RingValue& x, const RingValue& y) { return !(x == y); }

 private:
  RingPtr ring_;
  std::shared_ptr<const detail::Payload> data_;
};

using Monomial = std::vector<std::uint32_t>;

namespace detail {

struct PolyTerm {
  Monomial exponents;
  RingValue coeff;
};

struct Fraction {
  RingValue num;
  unsigned k = 0;  // value is num / a^k
};

struct MixedPair {
  RingValue r;  // element of R
  RingValue f;  // element of R_a[t] with zero constant term
};

struct Payload : std::variant<mpz_class, std::vector<PolyTerm>, Fraction, MixedPair> {
  using variant::variant;
};

}  // namespace detail

enum class RingKind { Integer, IntegerMod, Polynomial, Localized, Mixed };

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  virtual RingKind kind() const = 0;
  const std::string& spec() const noexcept { return spec_; }

  virtual RingValue zero() const = 0;
  virtual RingValue one() const = 0;
  virtual RingValue from_integer(const mpz_class& k) const = 0;

  virtual RingValue add(const RingValue& x, const RingValue& y) const = 0;
  virtual RingValue negate(const RingValue& x) const = 0;
  virtual RingValue multiply(const RingValue& x, const RingValue& y) const = 0;
  virtual bool equal(const RingValue& x, const RingValue& y) const = 0;
  virtual bool is_zero(const RingValue& x) const = 0;

  /// The unique z with y*z = x, if the ring can certify one.
  virtual std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const = 0;

  virtual std::string format(const RingValue& x) const = 0;
  /// Named generator (polynomial variable), looked up through the tower.
  virtual std::optional<RingValue> variable(std::string_view name) const = 0;

  virtual bool is_domain() const = 0;
  /// True only when `x` is certified not to divide zero.
  virtual bool is_non_zero_divisor(const RingValue& x) const = 0;

  RingPtr ptr() const { return shared_from_this(); }

 protected:
  explicit Ring(std::string spec) : spec_(std::move(spec)) {}
  RingValue make(detail::Payload payload) const;
  void check_owned(const RingValue& x) const;

 private:
  std::string spec_;
};

class IntegerRing final : public Ring {
 public:
  IntegerRing();
  RingKind kind() const override { return RingKind::Integer; }
  RingValue zero() const override;
  RingValue one() const override;
  RingValue from_integer(const mpz_class& k) const override;
  RingValue add(const RingValue& x, const RingValue& y) const override;
  RingValue negate(const RingValue& x) const override;
  RingValue multiply(const RingValue& x, const RingValue& y) const override;
  bool equal(const RingValue& x, const RingValue& y) const override;
  bool is_zero(const RingValue& x) const override;
  std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const override;
  std::string format(const RingValue& x) const override;
  std::optional<RingValue> variable(std::string_view) const override { return std::nullopt; }
  bool is_domain() const override { return true; }
  bool is_non_zero_divisor(const RingValue& x) const override { return !is_zero(x); }
};

class IntegerModRing final : public Ring {
 public:
  explicit IntegerModRing(mpz_class modulus);
  RingKind kind() const override { return RingKind::IntegerMod; }
  const mpz_class& modulus() const noexcept { return m_; }
  RingValue zero() const override;
  RingValue one() const override;
  RingValue from_integer(const mpz_class& k) const override;
  RingValue add(const RingValue& x, const RingValue& y) const override;
  RingValue negate(const RingValue& x) const override;
  RingValue multiply(const RingValue& x, const RingValue& y) const override;
  bool equal(const RingValue& x, const RingValue& y) const override;
  bool is_zero(const RingValue& x) const override;
  std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const override;
  std::string format(const RingValue& x) const override;
  std::optional<RingValue> variable(std::string_view) const override { return std::nullopt; }
  bool is_domain() const override;
  bool is_non_zero_divisor(const RingValue& x) const override;

 private:
  mpz_class reduce(const mpz_class& k) const;
  mpz_class m_;
};

class PolynomialRing final : public Ring {
 public:
  PolynomialRing(RingPtr base, std::vector<std::string> vars);
  RingKind kind() const override { return RingKind::Polynomial; }
  const RingPtr& base() const noexcept { return base_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }

  RingValue zero() const override;
  RingValue one() const override;
  RingValue from_integer(const mpz_class& k) const override;
  RingValue add(const RingValue& x, const RingValue& y) const override;
  RingValue negate(const RingValue& x) const override;
  RingValue multiply(const RingValue& x, const RingValue& y) const override;
  bool equal(const RingValue& x, const RingValue& y) const override;
  bool is_zero(const RingValue& x) const override;
  std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const override;
  std::string format(const RingValue& x) const override;
  std::optional<RingValue> variable(std::string_view name) const override;
  bool is_domain() const override { return base_->is_domain(); }
  bool is_non_zero_divisor(const RingValue& x) const override;

  RingValue constant(const RingValue& c) const;
  RingValue monomial(const RingValue& c, Monomial exponents) const;
  /// Builds a canonical polynomial from unsorted, possibly repeated terms.
  RingValue from_terms(std::vector<detail::PolyTerm> terms) const;
  const std::vector<detail::PolyTerm>& terms(const RingValue& x) const;
  /// Coefficient of the zero monomial.
  RingValue constant_term(const RingValue& x) const;
  /// Largest total exponent of variable `var` (0 for the zero polynomial).
  unsigned degree(const RingValue& x, std::size_t var = 0) const;

 private:
  RingPtr base_;
  std::vector<std::string> vars_;
};

class LocalizedRing final : public Ring {
 public:
  LocalizedRing(RingPtr base, RingValue a);
  RingKind kind() const override { return RingKind::Localized; }
  const RingPtr& base() const noexcept { return base_; }
  const RingValue& element() const noexcept { return a_; }

  RingValue zero() const override;
  RingValue one() const override;
  RingValue from_integer(const mpz_class& k) const override;
  RingValue add(const RingValue& x, const RingValue& y) const override;
  RingValue negate(const RingValue& x) const override;
  RingValue multiply(const RingValue& x, const RingValue& y) const override;
  bool equal(const RingValue& x, const RingValue& y) const override;
  bool is_zero(const RingValue& x) const override;
  std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const override;
  std::string format(const RingValue& x) const override;
  std::optional<RingValue> variable(std::string_view name) const override;
  bool is_domain() const override { return base_->is_domain(); }
  bool is_non_zero_divisor(const RingValue& x) const override;

  /// x / a^k in canonical (minimal k) form.
  RingValue fraction(const RingValue& num, unsigned k) const;
  const detail::Fraction& parts(const RingValue& x) const;

 private:
  RingPtr base_;
  RingValue a_;
};

class MixedRing final : public Ring {
 public:
  MixedRing(RingPtr base, RingValue a, std::string var);
  RingKind kind() const override { return RingKind::Mixed; }
  const RingPtr& base() const noexcept { return base_; }
  const RingValue& element() const noexcept { return a_; }
  const std::string& var() const noexcept { return var_; }
  /// R_a
  const RingPtr& localized_base() const noexcept { return loc_; }
  /// R_a[t], the ring B embeds into.
  const RingPtr& ambient() const noexcept { return ambient_; }

  RingValue zero() const override;
  RingValue one() const override;
  RingValue from_integer(const mpz_class& k) const override;
  RingValue add(const RingValue& x, const RingValue& y) const override;
  RingValue negate(const RingValue& x) const override;
  RingValue multiply(const RingValue& x, const RingValue& y) const override;
  bool equal(const RingValue& x, const RingValue& y) const override;
  bool is_zero(const RingValue& x) const override;
  std::optional<RingValue> divide_exact(const RingValue& x, const RingValue& y) const override;
  std::string format(const RingValue& x) const override;
  std::optional<RingValue> variable(std::string_view name) const override;
  bool is_domain() const override { return base_->is_domain(); }
  bool is_non_zero_divisor(const RingValue& x) const override;

  /// (r, f); throws if f has a constant term.
  RingValue pair(const RingValue& r, const RingValue& f) const;
  const detail::MixedPair& parts(const RingValue& x) const;
  /// (r, f) -> l(r) + f in R_a[t]; injective.
  RingValue embed(const RingValue& x) const;
  /// Inverse of `embed` on its image.
  std::optional<RingValue> from_ambient(const RingValue& p) const;
  /// Membership in the ideal t*R_a[t] (first component zero).
  bool in_ideal(const RingValue& x) const;

 private:
  RingPtr base_;
  RingValue a_;
  std::string var_;
  RingPtr loc_;
  RingPtr ambient_;
};

// Interned constructors.  Equal specs give the same descriptor object.
RingPtr integers();
RingPtr integers_mod(const mpz_class& m);
RingPtr polynomials(const RingPtr& base, std::vector<std::string> vars);
RingPtr localized(const RingPtr& base, const RingValue& a);
RingPtr mixed(const RingPtr& base, const RingValue& a, const std::string& var = "t");

const IntegerModRing& as_integer_mod(const Ring& r);
const PolynomialRing& as_polynomial(const Ring& r);
const LocalizedRing& as_localized(const Ring& r);
const MixedRing& as_mixed(const Ring& r);

/// Integer payload of an element of Z or Z/m.
const mpz_class& integer_value(const RingValue& x);

void require_same_ring(const RingValue& x, const RingValue& y);
void require_ring(const RingValue& x, const RingPtr& ring);

// Ring-spec mini-language:
//   ring   := atom ("[" var ("," var)* "]")*
//   atom   := "Z" | "Z/" int | "Loc(" ring "," value ")" | "B(" ring "," value ["," var] ")"
//   value  := expression over the ring with + - * / ^, integers, variables
RingPtr parse_ring(std::string_view text);
RingValue parse_value(const RingPtr& ring, std::string_view text);

}  // namespace stsp
