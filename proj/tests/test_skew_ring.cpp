#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlab/skew_ring.hpp"

using namespace skewlab;

namespace {

PartialAction swap_action() {
  GroupSpec z2(0, {2});
  return PartialAction(z2, {"a", "b"},
                       {{z2.element({1}), {"a", "b"}}},
                       {{z2.element({1}), {{"a", "b"}, {"b", "a"}}}});
}

PartialAction identity_on_a() {
  GroupSpec z2(0, {2});
  return PartialAction(z2, {"a", "b"},
                       {{z2.element({1}), {"a"}}},
                       {{z2.element({1}), {{"a", "a"}}}});
}

SkewRingElement monomial_of(const PartialAction& action, const FieldSpec& field,
                            const std::string& label, const GroupElement& t) {
  FinSuppFunction f(field, action.size());
  f.set(action.index_of(label), Scalar::one(field));
  return SkewRingElement::monomial(t, f);
}

} // namespace

TEST_CASE("the induced action moves indicator functions along the map") {
  PartialAction action = swap_action();
  const FieldSpec f2 = FieldSpec::gfp(2);
  InducedAction alpha(action, f2);
  FinSuppFunction chi_a = FinSuppFunction::indicator(f2, 2, {action.index_of("a")});
  FinSuppFunction chi_b = FinSuppFunction::indicator(f2, 2, {action.index_of("b")});
  CHECK(alpha.apply(action.group().element({1}), chi_a) == chi_b);
  CHECK(alpha.apply(action.group().element({1}), chi_b) == chi_a);
  CHECK(alpha.apply(action.group().zero(), chi_a) == chi_a);
}

TEST_CASE("the induced action rejects functions outside its domain") {
  PartialAction action = identity_on_a();
  const FieldSpec f2 = FieldSpec::gfp(2);
  InducedAction alpha(action, f2);
  FinSuppFunction chi_b = FinSuppFunction::indicator(f2, 2, {action.index_of("b")});
  try {
    alpha.apply(action.group().element({1}), chi_b);
    FAIL("must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainViolation);
  }
}

TEST_CASE("monomial products follow the sliding rule") {
  // over the 2-point shift window: (chi_2 d_1)(chi_1 d_-1) = chi_2 d_0 but
  // (chi_1 d_-1)(chi_2 d_1) = chi_1 d_0, and squares of the movers vanish
  PartialAction action = make_shift_window(2);
  const FieldSpec f2 = FieldSpec::gfp(2);
  InducedAction alpha(action, f2);
  const GroupSpec& z = action.group();
  const GroupElement up = z.element({1}), down = z.element({-1}), zero = z.zero();

  SkewRingElement fwd = monomial_of(action, f2, "2", up);
  SkewRingElement back = monomial_of(action, f2, "1", down);
  CHECK(ring_mul(alpha, fwd, back) == monomial_of(action, f2, "2", zero));
  CHECK(ring_mul(alpha, back, fwd) == monomial_of(action, f2, "1", zero));
  CHECK(ring_mul(alpha, fwd, fwd).is_zero());
  CHECK(ring_mul(alpha, back, back).is_zero());
}

TEST_CASE("chi_X d_0 is a two-sided identity") {
  for (const PartialAction& action :
       {swap_action(), identity_on_a(), make_shift_window(3)}) {
    const FieldSpec f3 = FieldSpec::gfp(3);
    RingSpace space(action);
    InducedAction alpha(action, f3);
    std::vector<int> all;
    for (int x = 0; x < action.size(); ++x) all.push_back(x);
    SkewRingElement e = unit_indicator(space, f3, all);
    for (int i = 0; i < space.dim(); ++i) {
      SkewRingElement m = space.basis_element(f3, i);
      CHECK(ring_mul(alpha, e, m) == m);
      CHECK(ring_mul(alpha, m, e) == m);
    }
  }
}

TEST_CASE("the structure table matches element-level multiplication") {
  for (const PartialAction& action :
       {swap_action(), identity_on_a(), make_shift_window(3)}) {
    for (const FieldSpec& field : {FieldSpec::gfp(2), FieldSpec::gfp(5)}) {
      RingSpace space(action);
      InducedAction alpha(action, field);
      for (int i = 0; i < space.dim(); ++i) {
        for (int j = 0; j < space.dim(); ++j) {
          SkewRingElement prod =
              ring_mul(alpha, space.basis_element(field, i), space.basis_element(field, j));
          int k = space.table(i, j);
          if (k < 0)
            CHECK(prod.is_zero());
          else
            CHECK(prod == space.basis_element(field, k));
        }
      }
    }
  }
}

TEST_CASE("coordinate multiplication is linear in both arguments") {
  PartialAction action = make_shift_window(2);
  const FieldSpec f5 = FieldSpec::gfp(5);
  RingSpace space(action);
  InducedAction alpha(action, f5);
  // dense elements with distinct coefficients exercise every table entry
  std::vector<Scalar> u, v;
  for (int i = 0; i < space.dim(); ++i) {
    u.push_back(Scalar::from_int(f5, i + 1));
    v.push_back(Scalar::from_int(f5, 2 * i + 1));
  }
  SkewRingElement a = space.element(f5, u);
  SkewRingElement b = space.element(f5, v);
  SkewRingElement via_ring = ring_mul(alpha, a, b);
  auto w = with_field_ops(f5, [&](auto f) {
    return scalars_of(f, mul_coords(space, f, values_of(f, u), values_of(f, v)));
  });
  CHECK(space.element(f5, w) == via_ring);
}

TEST_CASE("elements round-trip through coordinates") {
  PartialAction action = swap_action();
  const FieldSpec q = FieldSpec::rationals();
  RingSpace space(action);
  std::vector<Scalar> coords;
  for (int i = 0; i < space.dim(); ++i) coords.push_back(Scalar::from_fraction(i - 1, 3));
  SkewRingElement a = space.element(q, coords);
  CHECK(space.coords(a) == coords);
  for (int i = 0; i < space.dim(); ++i) {
    const auto& m = space.basis()[static_cast<std::size_t>(i)];
    CHECK(space.basis_index(m.t, m.x) == i);
  }
}

TEST_CASE("membership requires supp(f_t) inside X_t") {
  PartialAction action = identity_on_a();
  const FieldSpec f2 = FieldSpec::gfp(2);
  RingSpace space(action);
  InducedAction alpha(action, f2);
  SkewRingElement bad = monomial_of(action, f2, "b", action.group().element({1}));
  try {
    require_member(action, bad);
    FAIL("must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainViolation);
  }
  CHECK_THROWS_AS(ring_mul(alpha, bad, bad), Error);
  CHECK_THROWS_AS(space.coords(bad), Error);
}

TEST_CASE("basis ordering is by group element, then point") {
  PartialAction action = make_shift_window(2);
  RingSpace space(action);
  REQUIRE(space.dim() == 4);
  const GroupSpec& z = action.group();
  // slices: X_{-1} = {1}, X_0 = {1,2}, X_1 = {2}
  CHECK(space.basis()[0].t == z.element({-1}));
  CHECK(action.label(space.basis()[0].x) == "1");
  CHECK(space.basis()[1].t == z.zero());
  CHECK(action.label(space.basis()[1].x) == "1");
  CHECK(space.basis()[2].t == z.zero());
  CHECK(action.label(space.basis()[2].x) == "2");
  CHECK(space.basis()[3].t == z.element({1}));
  CHECK(action.label(space.basis()[3].x) == "2");
}

TEST_CASE("ring dimension guard") {
  Guards tight;
  tight.max_dim = 8;
  PartialAction action = make_shift_window(3); // dimension 9
  try {
    RingSpace space(action, tight);
    FAIL("must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionGuard);
  }
}

TEST_CASE("the full corner of the swap ring has a one-dimensional center") {
  // the swap ring is the 2x2 matrix algebra, whose center is the scalars
  PartialAction action = swap_action();
  const FieldSpec f2 = FieldSpec::gfp(2);
  RingSpace space(action);
  SubspaceBasis corner = corner_basis(space, f2, {0, 1});
  CHECK(corner.dim() == space.dim());
  SubspaceBasis center = center_of_corner(space, f2, {0, 1});
  REQUIRE(center.dim() == 1);
  CHECK(center.rows[0] == space.coords(unit_indicator(space, f2, {0, 1})));
  FieldCheckResult check = corner_center_field_check(space, f2, {0, 1});
  CHECK(check.is_field);
  CHECK(check.center_dim == 1);
}

TEST_CASE("a fixed point creates a corner whose center is not a field") {
  // at e = chi_a d_0 the corner is spanned by e and u = chi_a d_1 with
  // u*u = e, so it is the group algebra of Z_2 over GF(2); u + e squares
  // to zero, so the (commutative) corner cannot be a field
  PartialAction action = identity_on_a();
  const FieldSpec f2 = FieldSpec::gfp(2);
  RingSpace space(action);
  InducedAction alpha(action, f2);
  const int a = action.index_of("a");

  SubspaceBasis corner = corner_basis(space, f2, {a});
  CHECK(corner.dim() == 2);
  SubspaceBasis center = center_of_corner(space, f2, {a});
  CHECK(center.dim() == 2);

  SkewRingElement e = unit_indicator(space, f2, {a});
  SkewRingElement u = monomial_of(action, f2, "a", action.group().element({1}));
  CHECK(ring_mul(alpha, u, u) == e);
  SkewRingElement nilpotent = u + e;
  CHECK(ring_mul(alpha, nilpotent, nilpotent).is_zero());

  FieldCheckResult check = corner_center_field_check(space, f2, {a});
  CHECK_FALSE(check.is_field);
  CHECK(check.center_dim == 2);
  REQUIRE(check.witness.has_value());
  // the witness is a nonzero central element with no inverse in the center
  CHECK_FALSE(check.witness->is_zero());
}

TEST_CASE("field checks over the rationals are refused, not faked") {
  PartialAction action = swap_action();
  RingSpace space(action);
  try {
    corner_center_field_check(space, FieldSpec::rationals(), {0, 1});
    FAIL("must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedField);
  }
}

TEST_CASE("multiplication associates on every basis triple") {
  for (const PartialAction& action :
       {swap_action(), identity_on_a(), make_shift_window(3)}) {
    for (const FieldSpec& field :
         {FieldSpec::gfp(2), FieldSpec::gfp(3), FieldSpec::rationals()}) {
      RingSpace space(action);
      CHECK_FALSE(associativity_witness(space, field).has_value());
    }
  }
}

TEST_CASE("element arithmetic stays in canonical sparse form") {
  PartialAction action = swap_action();
  const FieldSpec f3 = FieldSpec::gfp(3);
  SkewRingElement a = monomial_of(action, f3, "a", action.group().zero());
  SkewRingElement sum = a + a + a; // 3 chi_a = 0 over GF(3)
  CHECK(sum.is_zero());
  CHECK(sum.group_support_size() == 0);
  SkewRingElement diff = a - a;
  CHECK(diff == SkewRingElement(f3, action.size()));
  SkewRingElement scaled = Scalar::from_int(f3, 2) * a;
  CHECK((scaled + a).is_zero());
  CHECK(a.coefficient_sum() == FinSuppFunction::indicator(f3, 2, {0}));
}
