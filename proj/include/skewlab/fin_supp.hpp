#ifndef SKEWLAB_FIN_SUPP_HPP
#define SKEWLAB_FIN_SUPP_HPP

#include <map>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/field.hpp"

namespace skewlab {

// Element of F_0(X): a function X -> K with (finite) support, stored sparsely
// over point indices.  Zero coefficients are never kept, so equality is
// structural.
class FinSuppFunction {
public:
  FinSuppFunction(const FieldSpec& field, int width) : field_(field), width_(width) {
    if (width < 0) fail(ErrorCode::InvalidArgument, "negative width");
  }

  static FinSuppFunction indicator(const FieldSpec& field, int width,
                                   const std::vector<int>& points) {
    FinSuppFunction f(field, width);
    for (int x : points) f.set(x, Scalar::one(field));
    return f;
  }

  const FieldSpec& field() const { return field_; }
  int width() const { return width_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Scalar>& terms() const { return terms_; }

  Scalar at(int x) const {
    check_index(x);
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void set(int x, const Scalar& value) {
    check_index(x);
    if (!(value.field() == field_))
      fail(ErrorCode::MixedFields, "coefficient from a different field");
    if (value.is_zero())
      terms_.erase(x);
    else
      terms_.insert_or_assign(x, value);
  }

  void add_at(int x, const Scalar& value) { set(x, at(x) + value); }

  std::vector<int> support() const {
    std::vector<int> out;
    out.reserve(terms_.size());
    for (const auto& [x, c] : terms_) out.push_back(x);
    return out;
  }

  friend FinSuppFunction operator+(const FinSuppFunction& a, const FinSuppFunction& b) {
    a.check_compatible(b);
    FinSuppFunction out = a;
    for (const auto& [x, c] : b.terms_) out.add_at(x, c);
    return out;
  }

  friend FinSuppFunction operator-(const FinSuppFunction& a, const FinSuppFunction& b) {
    a.check_compatible(b);
    FinSuppFunction out = a;
    for (const auto& [x, c] : b.terms_) out.add_at(x, -c);
    return out;
  }

  FinSuppFunction operator-() const {
    FinSuppFunction out(field_, width_);
    for (const auto& [x, c] : terms_) out.set(x, -c);
    return out;
  }

  // pointwise product: the multiplication of F_0(X)
  friend FinSuppFunction operator*(const FinSuppFunction& a, const FinSuppFunction& b) {
    a.check_compatible(b);
    FinSuppFunction out(a.field_, a.width_);
    for (const auto& [x, c] : a.terms_) {
      auto it = b.terms_.find(x);
      if (it != b.terms_.end()) out.set(x, c * it->second);
    }
    return out;
  }

  friend FinSuppFunction operator*(const Scalar& c, const FinSuppFunction& f) {
    FinSuppFunction out(f.field_, f.width_);
    for (const auto& [x, v] : f.terms_) out.set(x, c * v);
    return out;
  }

  bool operator==(const FinSuppFunction&) const = default;

private:
  void check_index(int x) const {
    if (x < 0 || x >= width_)
      fail(ErrorCode::InvalidArgument, "point index out of range");
  }
  void check_compatible(const FinSuppFunction& other) const {
    if (!(field_ == other.field_))
      fail(ErrorCode::MixedFields, "combining functions over different fields");
    if (width_ != other.width_)
      fail(ErrorCode::SpecMismatch, "combining functions over different sets");
  }

  FieldSpec field_;
  int width_;
  std::map<int, Scalar> terms_;
};

} // namespace skewlab

#endif
