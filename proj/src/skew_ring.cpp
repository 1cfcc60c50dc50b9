#include "skewlab/skew_ring.hpp"

#include <algorithm>
#include <string>

namespace skewlab {

FinSuppFunction InducedAction::apply(const GroupElement& t, const FinSuppFunction& f) const {
  FinSuppFunction out(field_, f.width());
  for (const auto& [y, c] : f.terms()) {
    int x = action_->maybe_apply(t, y);
    if (x < 0)
      fail(ErrorCode::DomainViolation,
           "alpha_{" + t.key() + "} applied to a function supported at '" +
               action_->label(y) + "' outside X_{" + action_->group().neg(t).key() + "}");
    out.set(x, c);
  }
  return out;
}

void SkewRingElement::set_term(const GroupElement& t, const FinSuppFunction& f) {
  if (!(f.field() == field_))
    fail(ErrorCode::MixedFields, "term coefficient from a different field");
  if (f.width() != width_)
    fail(ErrorCode::SpecMismatch, "term over a different set");
  if (f.is_zero())
    terms_.erase(t);
  else
    terms_.insert_or_assign(t, f);
}

void SkewRingElement::check_compatible(const SkewRingElement& other) const {
  if (!(field_ == other.field_))
    fail(ErrorCode::MixedFields, "combining ring elements over different fields");
  if (width_ != other.width_)
    fail(ErrorCode::ActionMismatch, "combining ring elements over different sets");
}

SkewRingElement operator+(const SkewRingElement& a, const SkewRingElement& b) {
  a.check_compatible(b);
  SkewRingElement out = a;
  for (const auto& [t, f] : b.terms_) out.add_term(t, f);
  return out;
}

SkewRingElement operator-(const SkewRingElement& a, const SkewRingElement& b) {
  return a + (-b);
}

SkewRingElement SkewRingElement::operator-() const {
  SkewRingElement out(field_, width_);
  for (const auto& [t, f] : terms_) out.set_term(t, -f);
  return out;
}

SkewRingElement operator*(const Scalar& c, const SkewRingElement& a) {
  SkewRingElement out(a.field_, a.width_);
  for (const auto& [t, f] : a.terms_) out.set_term(t, c * f);
  return out;
}

SkewRingElement ring_mul(const InducedAction& alpha, const SkewRingElement& a,
                         const SkewRingElement& b) {
  const GroupSpec& g = alpha.action().group();
  SkewRingElement out(a.field(), a.width());
  if (!(a.field() == b.field()))
    fail(ErrorCode::MixedFields, "multiplying ring elements over different fields");
  if (a.width() != b.width() || a.width() != alpha.action().size())
    fail(ErrorCode::ActionMismatch, "multiplying ring elements over different sets");
  require_member(alpha.action(), a);
  require_member(alpha.action(), b);
  for (const auto& [t, ft] : a.terms()) {
    const FinSuppFunction pulled = alpha.apply(g.neg(t), ft); // checks supp(f_t) in X_t
    for (const auto& [s, gs] : b.terms()) {
      const FinSuppFunction product = pulled * gs;
      if (product.is_zero()) continue;
      out.add_term(g.add(t, s), alpha.apply(t, product));
    }
  }
  return out;
}

void require_member(const PartialAction& action, const SkewRingElement& a) {
  for (const auto& [t, f] : a.terms())
    for (const auto& [x, c] : f.terms())
      if (!action.in_domain(t, x))
        fail(ErrorCode::DomainViolation,
             "coefficient of delta_{" + t.key() + "} supported at '" + action.label(x) +
                 "' outside X_{" + t.key() + "}");
}

RingSpace::RingSpace(const PartialAction& action, const Guards& guards) : action_(&action) {
  require_valid(action);
  const std::int64_t dim = action.ring_dim();
  if (dim > guards.max_dim)
    fail(ErrorCode::DimensionGuard, "ring dimension " + std::to_string(dim) +
                                        " exceeds max_dim = " + std::to_string(guards.max_dim));
  for (const auto& [t, slice] : action.slices()) {
    for (int x : slice.domain) {
      index_[t][x] = static_cast<int>(basis_.size());
      basis_.push_back({t, x});
    }
  }
  const GroupSpec& g = action.group();
  const int d = static_cast<int>(basis_.size());
  table_.assign(static_cast<std::size_t>(d) * d, -1);
  for (int i = 0; i < d; ++i) {
    const auto& [t, x] = basis_[i];
    const int back = action.apply(g.neg(t), x); // h_{-t}(x), defined since x in X_t
    for (int j = 0; j < d; ++j) {
      const auto& [s, y] = basis_[j];
      if (back != y) continue;
      const int k = basis_index(g.add(t, s), x);
      // x in X_t and h_{-t}(x) in X_s puts x in X_t n X_{t+s} by the
      // compatibility axiom, so the product monomial always exists
      if (k < 0)
        fail(ErrorCode::InvalidAction, "structure table hit a missing basis monomial");
      table_[static_cast<std::size_t>(i) * d + j] = k;
    }
  }
}

int RingSpace::basis_index(const GroupElement& t, int x) const {
  auto it = index_.find(t);
  if (it == index_.end()) return -1;
  auto jt = it->second.find(x);
  return jt == it->second.end() ? -1 : jt->second;
}

std::vector<Scalar> RingSpace::coords(const SkewRingElement& a) const {
  if (a.width() != action_->size())
    fail(ErrorCode::ActionMismatch, "element over a different set");
  std::vector<Scalar> out(static_cast<std::size_t>(dim()), Scalar::zero(a.field()));
  for (const auto& [t, f] : a.terms()) {
    for (const auto& [x, c] : f.terms()) {
      int i = basis_index(t, x);
      if (i < 0)
        fail(ErrorCode::DomainViolation,
             "element has support at '" + action_->label(x) + "' outside X_{" + t.key() + "}");
      out[static_cast<std::size_t>(i)] = c;
    }
  }
  return out;
}

SkewRingElement RingSpace::element(const FieldSpec& field, const std::vector<Scalar>& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    fail(ErrorCode::SpecMismatch, "coordinate vector length does not match the basis");
  SkewRingElement out(field, action_->size());
  for (int i = 0; i < dim(); ++i) {
    if (coords[static_cast<std::size_t>(i)].is_zero()) continue;
    FinSuppFunction f = out.component(basis_[static_cast<std::size_t>(i)].t);
    f.set(basis_[static_cast<std::size_t>(i)].x, coords[static_cast<std::size_t>(i)]);
    out.set_term(basis_[static_cast<std::size_t>(i)].t, f);
  }
  return out;
}

SkewRingElement RingSpace::basis_element(const FieldSpec& field, int i) const {
  std::vector<Scalar> coords(static_cast<std::size_t>(dim()), Scalar::zero(field));
  coords.at(static_cast<std::size_t>(i)) = Scalar::one(field);
  return element(field, coords);
}

bool subspace_contains(const SubspaceBasis& basis, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != basis.width)
    fail(ErrorCode::SpecMismatch, "vector width does not match the basis");
  return with_field_ops(basis.field, [&](auto f) {
    RowBasis<decltype(f)> rb(f, basis.width);
    for (const auto& row : basis.rows) rb.insert(values_of(f, row));
    return rb.contains(values_of(f, v));
  });
}

namespace {

template <class F>
SubspaceBasis basis_from_rows(const FieldSpec& field, const F& f, const RowBasis<F>& rb) {
  SubspaceBasis out{field, rb.width(), {}};
  for (const auto& row : rb.rows()) out.rows.push_back(scalars_of(f, row));
  return out;
}

void check_unit_set(const RingSpace& space, const std::vector<int>& points) {
  if (points.empty()) fail(ErrorCode::EmptySet, "local unit over the empty set");
  for (int x : points)
    if (x < 0 || x >= space.action().size())
      fail(ErrorCode::InvalidArgument, "unit set index out of range");
}

template <class F>
std::vector<typename F::Value> unit_coords(const RingSpace& space, const F& f,
                                           const std::vector<int>& points) {
  std::vector<typename F::Value> e(space.dim(), f.zero());
  const GroupElement zero = space.action().group().zero();
  for (int x : points) {
    int i = space.basis_index(zero, x);
    e[static_cast<std::size_t>(i)] = f.one();
  }
  return e;
}

template <class F>
RowBasis<F> corner_rows(const RingSpace& space, const F& f, const std::vector<int>& points) {
  // e (chi_x delta_t) e = [x in A][h_{-t}(x) in A] chi_x delta_t, so the
  // corner is spanned by the surviving basis monomials; computing it through
  // the generic product keeps this fact checked rather than assumed
  const auto e = unit_coords(space, f, points);
  RowBasis<F> rb(f, space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    std::vector<typename F::Value> v(space.dim(), f.zero());
    v[static_cast<std::size_t>(k)] = f.one();
    rb.insert(mul_coords(space, f, mul_coords(space, f, e, v), e));
  }
  return rb;
}

template <class F>
RowBasis<F> center_rows(const RingSpace& space, const F& f, const std::vector<int>& points) {
  using Vec = std::vector<typename F::Value>;
  RowBasis<F> corner = corner_rows(space, f, points);
  const std::vector<Vec>& w = corner.rows();
  const int m = corner.dim();
  const int d = space.dim();
  // commutant: z = sum_i c_i w_i with z w_j = w_j z for all j
  std::vector<Vec> system; // rows indexed by (j, coordinate), columns by i
  for (int j = 0; j < m; ++j) {
    std::vector<Vec> columns;
    for (int i = 0; i < m; ++i) {
      Vec lhs = mul_coords(space, f, w[i], w[j]);
      Vec rhs = mul_coords(space, f, w[j], w[i]);
      for (int l = 0; l < d; ++l) lhs[l] = f.sub(lhs[l], rhs[l]);
      columns.push_back(std::move(lhs));
    }
    for (int l = 0; l < d; ++l) {
      Vec row(m, f.zero());
      for (int i = 0; i < m; ++i) row[i] = columns[i][l];
      system.push_back(std::move(row));
    }
  }
  RowBasis<F> rb(f, d);
  for (const Vec& c : nullspace(f, std::move(system), m)) {
    Vec z(d, f.zero());
    for (int i = 0; i < m; ++i) {
      if (f.is_zero(c[i])) continue;
      for (int l = 0; l < d; ++l) z[l] = f.add(z[l], f.mul(c[i], w[i][l]));
    }
    rb.insert(std::move(z));
  }
  return rb;
}

} // namespace

SkewRingElement unit_indicator(const RingSpace& space, const FieldSpec& field,
                               const std::vector<int>& points) {
  check_unit_set(space, points);
  return SkewRingElement::monomial(
      space.action().group().zero(),
      FinSuppFunction::indicator(field, space.action().size(), points));
}

SubspaceBasis corner_basis(const RingSpace& space, const FieldSpec& field,
                           const std::vector<int>& points) {
  check_unit_set(space, points);
  return with_field_ops(field, [&](auto f) {
    return basis_from_rows(field, f, corner_rows(space, f, points));
  });
}

SubspaceBasis center_of_corner(const RingSpace& space, const FieldSpec& field,
                               const std::vector<int>& points) {
  check_unit_set(space, points);
  return with_field_ops(field, [&](auto f) {
    return basis_from_rows(field, f, center_rows(space, f, points));
  });
}

FieldCheckResult corner_center_field_check(const RingSpace& space, const FieldSpec& field,
                                           const std::vector<int>& points,
                                           const Guards& guards) {
  check_unit_set(space, points);
  if (field.kind() != FieldKind::GFp)
    fail(ErrorCode::UnsupportedField,
         "the corner-center field check enumerates elements and needs a finite field");
  const std::int64_t p = field.p();
  GfpOps f{p};
  using Vec = std::vector<std::int64_t>;

  RowBasis<GfpOps> center = center_rows(space, f, points);
  const std::vector<Vec>& z = center.rows();
  const int k = center.dim();
  if (k == 0) return {false, 0, std::nullopt};

  const Vec e = unit_coords(space, f, points);
  if (!center.contains(e))
    fail(ErrorCode::InvalidAction, "local unit missing from its own corner center");

  // number of nonzero elements is p^k - 1
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    if (count > guards.max_unit_enum / p + 1)
      fail(ErrorCode::TooLarge, "corner-center enumeration exceeds max_unit_enum = " +
                                    std::to_string(guards.max_unit_enum));
    count *= p;
  }
  if (count - 1 > guards.max_unit_enum)
    fail(ErrorCode::TooLarge, "corner-center enumeration exceeds max_unit_enum = " +
                                  std::to_string(guards.max_unit_enum));

  std::vector<std::int64_t> digits(static_cast<std::size_t>(k), 0);
  for (std::int64_t n = 1; n < count; ++n) {
    // odometer, least significant digit last
    int i = k;
    while (i > 0) {
      --i;
      if (++digits[static_cast<std::size_t>(i)] < p) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
    Vec u(space.dim(), 0);
    for (int j = 0; j < k; ++j) {
      if (digits[static_cast<std::size_t>(j)] == 0) continue;
      for (int l = 0; l < space.dim(); ++l)
        u[l] = f.add(u[l], f.mul(digits[static_cast<std::size_t>(j)], z[j][l]));
    }
    // u invertible in the center iff u * x = e has a solution there
    std::vector<Vec> cols;
    for (int j = 0; j < k; ++j) cols.push_back(mul_coords(space, f, u, z[j]));
    if (!solve_columns(f, cols, e)) {
      SkewRingElement witness = space.element(field, scalars_of(f, u));
      return {false, k, witness};
    }
  }
  return {true, k, std::nullopt};
}

std::optional<std::array<int, 3>> associativity_witness(const RingSpace& space,
                                                        const FieldSpec& field) {
  const int d = space.dim();
  const InducedAction alpha(space.action(), field);
  // first: the table must agree with element-level multiplication
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      SkewRingElement lhs = ring_mul(alpha, space.basis_element(field, i),
                                     space.basis_element(field, j));
      int k = space.table(i, j);
      SkewRingElement rhs = k < 0 ? SkewRingElement(field, space.action().size())
                                  : space.basis_element(field, k);
      if (!(lhs == rhs)) return std::array<int, 3>{i, j, -1};
    }
  }
  // then associativity itself, which the table reduces to integer checks
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ij = space.table(i, j);
      for (int k = 0; k < d; ++k) {
        const int jk = space.table(j, k);
        const int left = ij < 0 ? -1 : space.table(ij, k);
        const int right = jk < 0 ? -1 : space.table(i, jk);
        if (left != right) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

} // namespace skewlab
