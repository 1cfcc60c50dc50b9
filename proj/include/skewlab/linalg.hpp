#ifndef SKEWLAB_LINALG_HPP
#define SKEWLAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/field.hpp"

namespace skewlab {

// Arithmetic backends for the exact linear algebra below.  Both expose the
// same tiny surface so the elimination code can be written once.

struct GfpOps {
  using Value = std::int64_t;
  std::int64_t p;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& a) const { return a == 0; }
  Value add(const Value& a, const Value& b) const { return (a + b) % p; }
  Value sub(const Value& a, const Value& b) const { return mod_reduce(a - b, p); }
  Value neg(const Value& a) const { return a == 0 ? 0 : p - a; }
  Value mul(const Value& a, const Value& b) const { return mod_mul(a, b, p); }
  Value inv(const Value& a) const { return mod_inv(a, p); }

  Value from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(const Value& v) const {
    return Scalar::from_int(FieldSpec::gfp(p), v);
  }
};

struct RatOps {
  using Value = Rational;

  Value zero() const { return Rational(0); }
  Value one() const { return Rational(1); }
  bool is_zero(const Value& a) const { return a == 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(1) / a;
  }

  Value from_scalar(const Scalar& s) const { return s.value(); }
  Scalar to_scalar(const Value& v) const { return Scalar::from_rational(v); }
};

// Runs fn with the backend matching the field and returns its result.
template <class Fn>
auto with_field_ops(const FieldSpec& field, Fn&& fn) {
  if (field.kind() == FieldKind::GFp) return fn(GfpOps{field.p()});
  return fn(RatOps{});
}

// Incrementally maintained reduced row echelon basis.  Rows are kept with
// strictly increasing pivot positions, pivot entries 1, and pivot columns
// cleared everywhere else, so a given subspace has exactly one
// representation -- that canonical form is what report determinism leans on.
template <class F>
class RowBasis {
public:
  using Value = typename F::Value;
  using Vec = std::vector<Value>;

  RowBasis(const F& f, int width) : f_(f), width_(width) {}

  int width() const { return width_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v modulo the span in place.
  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Value c = v[pivots_[r]];
      if (f_.is_zero(c)) continue;
      for (int j = pivots_[r]; j < width_; ++j)
        v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    for (const Value& c : v)
      if (!f_.is_zero(c)) return false;
    return true;
  }

  // Adds v to the span; returns true when the dimension grew.
  bool insert(Vec v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < width_; ++j)
      if (!f_.is_zero(v[j])) { piv = j; break; }
    if (piv < 0) return false;
    const Value scale = f_.inv(v[piv]);
    for (int j = piv; j < width_; ++j) v[j] = f_.mul(v[j], scale);
    // clear the new pivot column from the old rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Value c = rows_[r][piv];
      if (f_.is_zero(c)) continue;
      for (int j = piv; j < width_; ++j)
        rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, v[j]));
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, piv);
    return true;
  }

private:
  F f_;
  int width_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Solves sum_j x_j * cols[j] = target exactly.  Returns one solution (free
// variables set to zero) or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Value>> solve_columns(
    const F& f, const std::vector<std::vector<typename F::Value>>& cols,
    const std::vector<typename F::Value>& target) {
  using Value = typename F::Value;
  const int m = static_cast<int>(cols.size());
  const int height = static_cast<int>(target.size());
  // augmented matrix [A | b], one row per equation
  std::vector<std::vector<Value>> a(height, std::vector<Value>(m + 1, f.zero()));
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = cols[j][i];
    a[i][m] = target[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < height; ++col) {
    int sel = -1;
    for (int i = row; i < height; ++i)
      if (!f.is_zero(a[i][col])) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    const Value scale = f.inv(a[row][col]);
    for (int j = col; j <= m; ++j) a[row][j] = f.mul(a[row][j], scale);
    for (int i = 0; i < height; ++i) {
      if (i == row) continue;
      const Value c = a[i][col];
      if (f.is_zero(c)) continue;
      for (int j = col; j <= m; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(c, a[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < height; ++i)
    if (!f.is_zero(a[i][m])) return std::nullopt;
  std::vector<Value> x(m, f.zero());
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = a[r][m];
  return x;
}

// Basis of {x : M x = 0} for the matrix whose rows are `rows`.  Free
// variables are assigned in increasing column order, giving a deterministic
// basis.
template <class F>
std::vector<std::vector<typename F::Value>> nullspace(
    const F& f, std::vector<std::vector<typename F::Value>> rows, int width) {
  using Value = typename F::Value;
  std::vector<int> pivot_col;
  int row = 0;
  const int height = static_cast<int>(rows.size());
  for (int col = 0; col < width && row < height; ++col) {
    int sel = -1;
    for (int i = row; i < height; ++i)
      if (!f.is_zero(rows[i][col])) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[row], rows[sel]);
    const Value scale = f.inv(rows[row][col]);
    for (int j = col; j < width; ++j) rows[row][j] = f.mul(rows[row][j], scale);
    for (int i = 0; i < height; ++i) {
      if (i == row) continue;
      const Value c = rows[i][col];
      if (f.is_zero(c)) continue;
      for (int j = col; j < width; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(width, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Value>> basis;
  for (int col = 0; col < width; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Value> v(width, f.zero());
    v[col] = f.one();
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
      v[pivot_col[r]] = f.neg(rows[r][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scalar-level conversions used at the public API boundary.
template <class F>
std::vector<typename F::Value> values_of(const F& f, const std::vector<Scalar>& v) {
  std::vector<typename F::Value> out;
  out.reserve(v.size());
  for (const Scalar& s : v) out.push_back(f.from_scalar(s));
  return out;
}

template <class F>
std::vector<Scalar> scalars_of(const F& f, const std::vector<typename F::Value>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(f.to_scalar(c));
  return out;
}

} // namespace skewlab

#endif
