#ifndef SKEWLAB_FIELD_HPP
#define SKEWLAB_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { GFp, Rational };

// Coefficient field: GF(p) for a prime p, or the rationals.
class FieldSpec {
public:
  static FieldSpec gfp(std::int64_t p);
  static FieldSpec rationals();

  FieldKind kind() const { return kind_; }
  std::int64_t p() const; // GFp only

  // Short name used on the CLI and in reports: "gf2", "gf3", ..., "rational".
  std::string name() const;
  static FieldSpec from_name(const std::string& name);

  bool operator==(const FieldSpec&) const = default;

private:
  FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::int64_t p_;
};

// Exact field element with value semantics.  All arithmetic checks that both
// operands belong to the same field and throws on division by zero; there is
// no silent coercion between fields.
class Scalar {
public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t n);
  static Scalar from_rational(const Rational& value);
  static Scalar from_fraction(const BigInt& num, const BigInt& den);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // GFp only: canonical residue in [0, p).
  std::int64_t residue() const;
  // Rational only: value in lowest terms with positive denominator.
  const Rational& value() const;

  Scalar operator-() const;
  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "3" for GF(p) residues, "num/den" for rationals (zero prints "0/1").
  std::string to_string() const;

private:
  explicit Scalar(const FieldSpec& field) : field_(field) {}

  FieldSpec field_;
  std::int64_t residue_ = 0; // GFp payload
  Rational rational_;        // Rational payload
};

// Modular helpers shared with the linear-algebra kernel.
std::int64_t mod_reduce(std::int64_t n, std::int64_t p);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);

// Parses "num/den" or a bare integer; canonicalizes.  Throws on zero
// denominators and garbage.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);

} // namespace skewlab

#endif
