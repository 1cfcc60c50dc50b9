#include "skewlab/field.hpp"

#include <cctype>
#include <cstdlib>

namespace skewlab {

namespace {

bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

FieldSpec FieldSpec::gfp(std::int64_t p) {
  if (!is_small_prime(p))
    fail(ErrorCode::InvalidArgument, "GF(p) needs a prime, got " + std::to_string(p));
  return FieldSpec(FieldKind::GFp, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rational, 0); }

std::int64_t FieldSpec::p() const {
  if (kind_ != FieldKind::GFp)
    fail(ErrorCode::InvalidArgument, "characteristic of the rationals requested");
  return p_;
}

std::string FieldSpec::name() const {
  if (kind_ == FieldKind::Rational) return "rational";
  return "gf" + std::to_string(p_);
}

FieldSpec FieldSpec::from_name(const std::string& name) {
  if (name == "rational") return rationals();
  if (name.size() > 2 && name.compare(0, 2, "gf") == 0) {
    char* end = nullptr;
    long long p = std::strtoll(name.c_str() + 2, &end, 10);
    if (end && *end == '\0' && is_small_prime(p)) return gfp(p);
  }
  fail(ErrorCode::InvalidArgument, "unknown field name '" + name + "'");
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; a is assumed reduced and nonzero
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1)
    fail(ErrorCode::DivisionByZero, "no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  return mod_reduce(t, p);
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::MalformedInstance, "bad rational literal '" + text + "'");
  };
  if (text.empty()) return bad();
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) return bad();
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return bad();
  BigInt d(den);
  if (d == 0)
    fail(ErrorCode::MalformedInstance, "zero denominator in '" + text + "'");
  // dividing normalizes sign and reduces to lowest terms
  return Rational(BigInt(num)) / Rational(d);
}

std::string rational_to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t n) {
  Scalar s(field);
  if (field.kind() == FieldKind::GFp)
    s.residue_ = mod_reduce(n, field.p());
  else
    s.rational_ = Rational(n);
  return s;
}

Scalar Scalar::from_rational(const Rational& value) {
  Scalar s(FieldSpec::rationals());
  s.rational_ = value;
  return s;
}

Scalar Scalar::from_fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "fraction with zero denominator");
  return from_rational(Rational(num) / Rational(den));
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::GFp ? residue_ == 0 : rational_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::GFp ? residue_ == 1 : rational_ == 1;
}

std::int64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::GFp)
    fail(ErrorCode::InvalidArgument, "residue of a rational scalar requested");
  return residue_;
}

const Rational& Scalar::value() const {
  if (field_.kind() != FieldKind::Rational)
    fail(ErrorCode::InvalidArgument, "rational value of a GF(p) scalar requested");
  return rational_;
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::MixedFields,
         a.field().name() + " scalar combined with " + b.field().name() + " scalar");
}

} // namespace

Scalar Scalar::operator-() const {
  if (field_.kind() == FieldKind::GFp)
    return from_int(field_, field_.p() - residue_);
  return from_rational(-rational_);
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.kind() == FieldKind::GFp)
    return from_int(field_, mod_inv(residue_, field_.p()));
  return from_rational(Rational(1) / rational_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.kind() == FieldKind::GFp)
    return Scalar::from_int(a.field_, a.residue_ + b.residue_);
  return Scalar::from_rational(a.rational_ + b.rational_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.kind() == FieldKind::GFp)
    return Scalar::from_int(a.field_, a.residue_ - b.residue_);
  return Scalar::from_rational(a.rational_ - b.rational_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.kind() == FieldKind::GFp)
    return Scalar::from_int(a.field_, mod_mul(a.residue_, b.residue_, a.field_.p()));
  return Scalar::from_rational(a.rational_ * b.rational_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.kind() == FieldKind::GFp) return a.residue_ == b.residue_;
  return a.rational_ == b.rational_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::GFp) return std::to_string(residue_);
  return rational_to_string(rational_);
}

} // namespace skewlab
