#include "skewlab/simplicity.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace skewlab {

namespace {

template <class F>
using VecOf = std::vector<typename F::Value>;

// work-list closure: every vector that ever grew the span gets its monomial
// products tried in turn; at the fixpoint the span is closed under products
// with every basis monomial and hence, by linearity, under products with the
// whole ring
template <class F>
RowBasis<F> closure_rows(const RingSpace& space, const F& f, const std::vector<VecOf<F>>& seeds) {
  const int d = space.dim();
  RowBasis<F> rb(f, d);
  std::deque<VecOf<F>> queue;
  for (const VecOf<F>& v : seeds)
    if (rb.insert(v)) queue.push_back(v);
  while (!queue.empty() && rb.dim() < d) {
    VecOf<F> v = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < d; ++k) {
      VecOf<F> l = mul_basis_left(space, f, k, v);
      if (rb.insert(l)) queue.push_back(std::move(l));
      VecOf<F> r = mul_basis_right(space, f, v, k);
      if (rb.insert(r)) queue.push_back(std::move(r));
    }
  }
  return rb;
}

template <class F>
SubspaceBasis to_subspace(const FieldSpec& field, const F& f, const RowBasis<F>& rb) {
  SubspaceBasis out{field, rb.width(), {}};
  for (const auto& row : rb.rows()) out.rows.push_back(scalars_of(f, row));
  return out;
}

std::vector<int> subset_from_mask(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

// invariance of the ideal F_0(V) by linear algebra: intersect with each
// D_{-t}, push through alpha_t, check containment
template <class F>
bool ideal_route_invariant(const PartialAction& action, const F& f,
                           const std::vector<int>& subset) {
  const int n = action.size();
  RowBasis<F> ideal(f, n);
  for (int x : subset) {
    VecOf<F> row(n, f.zero());
    row[x] = f.one();
    ideal.insert(std::move(row));
  }
  const std::vector<VecOf<F>>& b = ideal.rows();
  const int m = ideal.dim();
  for (const GroupElement& t : action.effective_support()) {
    if (action.group().is_zero(t)) continue;
    const std::vector<int>& source = action.domain(action.group().neg(t));
    // lambda-space of combinations supported inside X_{-t}
    std::vector<VecOf<F>> constraints;
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(source.begin(), source.end(), x)) continue;
      VecOf<F> row(m, f.zero());
      for (int i = 0; i < m; ++i) row[i] = b[i][x];
      constraints.push_back(std::move(row));
    }
    for (const VecOf<F>& lambda : nullspace(f, std::move(constraints), m)) {
      VecOf<F> w(n, f.zero());
      for (int i = 0; i < m; ++i)
        for (int x = 0; x < n; ++x) w[x] = f.add(w[x], f.mul(lambda[i], b[i][x]));
      VecOf<F> image(n, f.zero());
      for (int x = 0; x < n; ++x) {
        if (f.is_zero(w[x])) continue;
        image[action.apply(t, x)] = w[x];
      }
      if (!ideal.contains(image)) return false;
    }
  }
  return true;
}

} // namespace

IdealSubspace ideal_closure(const RingSpace& space, const FieldSpec& field,
                            const std::vector<SkewRingElement>& generators) {
  for (const SkewRingElement& g : generators) require_member(space.action(), g);
  IdealSubspace out = with_field_ops(field, [&](auto f) {
    std::vector<VecOf<decltype(f)>> seeds;
    for (const SkewRingElement& g : generators)
      seeds.push_back(values_of(f, space.coords(g)));
    return IdealSubspace{to_subspace(field, f, closure_rows(space, f, seeds)), false, false};
  });
  auto [left, right] = verify_ideal(space, out.basis);
  out.left_closed = left;
  out.right_closed = right;
  return out;
}

std::pair<bool, bool> verify_ideal(const RingSpace& space, const SubspaceBasis& basis) {
  return with_field_ops(basis.field, [&](auto f) {
    RowBasis<decltype(f)> rb(f, basis.width);
    std::vector<VecOf<decltype(f)>> rows;
    for (const auto& row : basis.rows) {
      rows.push_back(values_of(f, row));
      rb.insert(rows.back());
    }
    bool left = true, right = true;
    for (const auto& row : rows) {
      for (int k = 0; k < space.dim(); ++k) {
        if (!rb.contains(mul_basis_left(space, f, k, row))) left = false;
        if (!rb.contains(mul_basis_right(space, f, row, k))) right = false;
      }
    }
    return std::make_pair(left, right);
  });
}

OracleVerdict is_simple_oracle(const RingSpace& space, const FieldSpec& field,
                               const Guards& guards) {
  if (field.kind() != FieldKind::GFp)
    fail(ErrorCode::UnsupportedField,
         "the subspace-scan oracle enumerates GF(p) vectors; the rationals have no enumeration");
  const std::int64_t p = field.p();
  GfpOps f{p};
  const int d = space.dim();
  OracleVerdict verdict{true, 0, std::nullopt, std::nullopt};

  for (int pivot = 0; pivot < d; ++pivot) {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(d - pivot - 1), 0);
    for (;;) {
      if (++verdict.scanned > guards.max_subspaces)
        fail(ErrorCode::DimensionGuard,
             "subspace scan exceeds max_subspaces = " + std::to_string(guards.max_subspaces) +
                 " without a verdict");
      std::vector<std::int64_t> v(static_cast<std::size_t>(d), 0);
      v[static_cast<std::size_t>(pivot)] = 1;
      for (std::size_t i = 0; i < digits.size(); ++i)
        v[static_cast<std::size_t>(pivot) + 1 + i] = digits[i];

      RowBasis<GfpOps> closure = closure_rows(space, f, {v});
      if (closure.dim() < d) {
        SubspaceBasis basis = to_subspace(field, f, closure);
        auto [left, right] = verify_ideal(space, basis);
        if (!left || !right || closure.dim() == 0)
          fail(ErrorCode::NotAnIdeal, "oracle produced a candidate that fails re-verification");
        verdict.simple = false;
        verdict.generator = space.element(field, scalars_of(f, v));
        verdict.proper_ideal = IdealSubspace{std::move(basis), left, right};
        return verdict;
      }

      // advance the tail odometer, least significant digit last
      bool rolled = true;
      std::size_t i = digits.size();
      while (i > 0) {
        --i;
        if (++digits[i] < p) { rolled = false; break; }
        digits[i] = 0;
      }
      if (rolled) break;
    }
  }
  return verdict;
}

GSimplicityResult is_G_simple(const PartialAction& action, const FieldSpec& field,
                              const Guards& guards) {
  const int n = action.size();
  if (n > guards.max_set)
    fail(ErrorCode::TooLarge, "G-simplicity enumeration needs |X| <= max_set = " +
                                  std::to_string(guards.max_set) + ", got " + std::to_string(n));
  return with_field_ops(field, [&](auto f) -> GSimplicityResult {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> subset = subset_from_mask(mask, n);
      if (ideal_route_invariant(action, f, subset)) return {false, subset};
    }
    return {true, {}};
  });
}

CorrespondenceResult invariance_correspondence(const PartialAction& action,
                                               const FieldSpec& field,
                                               const std::vector<int>& subset) {
  bool set_route = is_invariant_subset(action, subset);
  bool ideal_route = with_field_ops(
      field, [&](auto f) { return ideal_route_invariant(action, f, subset); });
  return {set_route, ideal_route};
}

CriteriaVerdict simplicity_criteria(const RingSpace& space, const FieldSpec& field,
                                    const Guards& guards) {
  const PartialAction& action = space.action();
  CriteriaVerdict v{};

  MinimalityResult minimal = is_minimal(action);
  v.minimal = minimal.minimal;
  v.minimality_witness = minimal.witness;

  FreenessResult freeness = is_free(action);
  v.free = freeness.free;
  v.freeness_witness = freeness.witness;

  GSimplicityResult gs = is_G_simple(action, field, guards);
  v.g_simple = gs.g_simple;
  v.g_simple_witness = gs.witness_set;

  if (field.kind() == FieldKind::GFp) {
    const int n = action.size();
    if (n > guards.max_set)
      fail(ErrorCode::TooLarge, "corner enumeration needs |X| <= max_set = " +
                                    std::to_string(guards.max_set) + ", got " + std::to_string(n));
    v.corners_are_fields = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> unit_set = subset_from_mask(mask, n);
      FieldCheckResult check = corner_center_field_check(space, field, unit_set, guards);
      if (!check.is_field) {
        v.corners_are_fields = false;
        v.non_field_units.push_back(unit_set);
        if (!v.non_field_witness) v.non_field_witness = check.witness;
      }
    }
  }
  return v;
}

SimplicityDecision decide_simplicity(const RingSpace& space, const FieldSpec& field,
                                     DecisionMethod method, const Guards& guards) {
  SimplicityDecision out{std::nullopt, std::nullopt, false, true};
  if (method != DecisionMethod::Criteria) out.oracle = is_simple_oracle(space, field, guards);
  if (method != DecisionMethod::Oracle) out.criteria = simplicity_criteria(space, field, guards);

  std::vector<bool> votes;
  if (out.oracle) votes.push_back(out.oracle->simple);
  if (out.criteria) {
    votes.push_back(out.criteria->dynamical_simple());
    if (auto alg = out.criteria->algebraic_simple()) votes.push_back(*alg);
  }
  out.simple = votes.front();
  for (bool b : votes)
    if (b != votes.front()) out.agree = false;
  return out;
}

namespace {

template <class T>
std::vector<T> restrict_coords(const std::vector<T>& v, const std::vector<int>& positions) {
  std::vector<T> out;
  out.reserve(positions.size());
  for (int i : positions) out.push_back(v[static_cast<std::size_t>(i)]);
  return out;
}

template <class F>
VecOf<F> witness_search(const RingSpace& space, const F& f, VecOf<F> rv,
                        const std::vector<int>& unit_set, const Guards& guards) {
  const PartialAction& action = space.action();
  const GroupSpec& g = action.group();
  const GroupElement zero = g.zero();
  const int d = space.dim();

  // massage the generator until its zero component is nonzero: multiply by
  // alpha_{-h}(chi_B) delta_{-h} where h is the smallest group element in
  // the support and B the support of its coefficient
  bool p0_nonzero = false;
  for (int x = 0; x < action.size(); ++x)
    if (!f.is_zero(rv[static_cast<std::size_t>(space.basis_index(zero, x))])) p0_nonzero = true;
  if (!p0_nonzero) {
    GroupElement h = zero;
    bool found = false;
    for (int i = 0; i < d && !found; ++i)
      if (!f.is_zero(rv[static_cast<std::size_t>(i)])) {
        h = space.basis()[static_cast<std::size_t>(i)].t;
        found = true;
      }
    if (!found) fail(ErrorCode::InvalidArgument, "unit certificate requested for zero");
    VecOf<F> m(static_cast<std::size_t>(d), f.zero());
    for (int x = 0; x < action.size(); ++x) {
      int i = space.basis_index(h, x);
      if (i < 0 || f.is_zero(rv[static_cast<std::size_t>(i)])) continue;
      int y = action.apply(g.neg(h), x);
      m[static_cast<std::size_t>(space.basis_index(g.neg(h), y))] = f.one();
    }
    rv = mul_coords(space, f, rv, m);
    bool fixed = false;
    for (int x = 0; x < action.size(); ++x)
      if (!f.is_zero(rv[static_cast<std::size_t>(space.basis_index(zero, x))])) fixed = true;
    if (!fixed)
      fail(ErrorCode::SearchExhausted, "massaged generator lost its zero component");
  }

  // constraint coordinates: everything outside the group support of the
  // massaged generator must vanish, and the zero block must equal chi_A
  std::set<GroupElement> group_support;
  for (int i = 0; i < d; ++i)
    if (!f.is_zero(rv[static_cast<std::size_t>(i)]))
      group_support.insert(space.basis()[static_cast<std::size_t>(i)].t);
  std::set<int> constrained;
  for (int i = 0; i < d; ++i)
    if (!group_support.count(space.basis()[static_cast<std::size_t>(i)].t)) constrained.insert(i);
  for (int x = 0; x < action.size(); ++x) constrained.insert(space.basis_index(zero, x));
  const std::vector<int> positions(constrained.begin(), constrained.end());

  VecOf<F> target_full(static_cast<std::size_t>(d), f.zero());
  for (int x : unit_set)
    target_full[static_cast<std::size_t>(space.basis_index(zero, x))] = f.one();
  const VecOf<F> target = restrict_coords(target_full, positions);

  RowBasis<F> span(f, d);
  std::vector<VecOf<F>> queue;
  span.insert(rv);
  queue.push_back(std::move(rv));

  for (int level = 0;; ++level) {
    std::vector<VecOf<F>> cols;
    for (const auto& row : span.rows()) cols.push_back(restrict_coords(row, positions));
    if (auto sol = solve_columns(f, cols, target)) {
      VecOf<F> out(static_cast<std::size_t>(d), f.zero());
      for (int i = 0; i < span.dim(); ++i) {
        if (f.is_zero((*sol)[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < d; ++j)
          out[static_cast<std::size_t>(j)] =
              f.add(out[static_cast<std::size_t>(j)],
                    f.mul((*sol)[static_cast<std::size_t>(i)],
                          span.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      }
      return out;
    }
    if (level >= guards.bfs_depth)
      fail(ErrorCode::SearchExhausted,
           "no unit certificate within bfs_depth = " + std::to_string(guards.bfs_depth));
    std::vector<VecOf<F>> next;
    for (const VecOf<F>& v : queue) {
      for (int k = 0; k < d; ++k) {
        VecOf<F> l = mul_basis_left(space, f, k, v);
        if (span.insert(l)) next.push_back(std::move(l));
        VecOf<F> r = mul_basis_right(space, f, v, k);
        if (span.insert(r)) next.push_back(std::move(r));
      }
    }
    if (next.empty())
      fail(ErrorCode::SearchExhausted,
           "ideal span stabilized without a unit certificate at level " + std::to_string(level));
    queue = std::move(next);
  }
}

void check_unit_points(const PartialAction& action, const std::vector<int>& unit_set) {
  if (unit_set.empty()) fail(ErrorCode::EmptySet, "unit certificate for the empty unit");
  for (int x : unit_set)
    if (x < 0 || x >= action.size())
      fail(ErrorCode::InvalidArgument, "unit set index out of range");
}

} // namespace

SkewRingElement unit_projection_witness(const RingSpace& space, const FieldSpec& field,
                                        const SkewRingElement& r, const std::vector<int>& unit_set,
                                        const Guards& guards) {
  check_unit_points(space.action(), unit_set);
  if (r.is_zero()) fail(ErrorCode::InvalidArgument, "unit certificate requested for zero");
  require_member(space.action(), r);
  GSimplicityResult gs = is_G_simple(space.action(), field, guards);
  if (!gs.g_simple)
    fail(ErrorCode::NotGSimple, "the coefficient algebra has a proper invariant ideal");

  return with_field_ops(field, [&](auto f) {
    auto rv = values_of(f, space.coords(r));
    auto out = witness_search(space, f, std::move(rv), unit_set, guards);
    return space.element(field, scalars_of(f, out));
  });
}

SkewRingElement central_ideal_witness(const RingSpace& space, const FieldSpec& field,
                                      const IdealSubspace& J, const std::vector<int>& unit_set,
                                      const Guards& guards) {
  check_unit_points(space.action(), unit_set);
  if (J.basis.dim() == 0) fail(ErrorCode::ZeroIdeal, "the zero ideal has no unit certificate");
  auto [left, right] = verify_ideal(space, J.basis);
  if (!left || !right)
    fail(ErrorCode::NotAnIdeal, "the given subspace is not a two-sided ideal");

  const int d = space.dim();
  return with_field_ops(field, [&](auto f) {
    using FType = decltype(f);
    std::vector<VecOf<FType>> rows;
    for (const auto& row : J.basis.rows) rows.push_back(values_of(f, row));
    const int m = static_cast<int>(rows.size());

    auto group_support_size = [&](const VecOf<FType>& v) {
      std::set<GroupElement> ts;
      for (int i = 0; i < d; ++i)
        if (!f.is_zero(v[static_cast<std::size_t>(i)]))
          ts.insert(space.basis()[static_cast<std::size_t>(i)].t);
      return static_cast<int>(ts.size());
    };

    // seed: element of J with the fewest group components.  Over GF(p) the
    // whole ideal is enumerated when it fits the guard; otherwise (and over
    // the rationals) rows and pairwise combinations stand in, and the final
    // verification below keeps the procedure honest.
    VecOf<FType> best;
    int best_size = d + 1;
    auto consider = [&](const VecOf<FType>& v) {
      bool zero = true;
      for (const auto& c : v)
        if (!f.is_zero(c)) { zero = false; break; }
      if (zero) return;
      int size = group_support_size(v);
      if (size < best_size) {
        best_size = size;
        best = v;
      }
    };

    bool enumerated = false;
    if constexpr (std::is_same_v<FType, GfpOps>) {
      const std::int64_t p = f.p;
      std::int64_t count = 1;
      bool fits = true;
      for (int i = 0; i < m; ++i) {
        if (count > guards.max_unit_enum / p + 1) { fits = false; break; }
        count *= p;
      }
      if (fits && count - 1 <= guards.max_unit_enum) {
        enumerated = true;
        std::vector<std::int64_t> digits(static_cast<std::size_t>(m), 0);
        for (std::int64_t n = 1; n < count; ++n) {
          std::size_t i = static_cast<std::size_t>(m);
          while (i > 0) {
            --i;
            if (++digits[i] < p) break;
            digits[i] = 0;
          }
          VecOf<FType> v(static_cast<std::size_t>(d), f.zero());
          for (int j = 0; j < m; ++j) {
            if (digits[static_cast<std::size_t>(j)] == 0) continue;
            for (int l = 0; l < d; ++l)
              v[static_cast<std::size_t>(l)] =
                  f.add(v[static_cast<std::size_t>(l)],
                        f.mul(digits[static_cast<std::size_t>(j)],
                              rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]));
          }
          consider(v);
        }
      }
    }
    if (!enumerated) {
      for (int i = 0; i < m; ++i) consider(rows[static_cast<std::size_t>(i)]);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          VecOf<FType> sum(static_cast<std::size_t>(d), f.zero());
          VecOf<FType> diff(static_cast<std::size_t>(d), f.zero());
          for (int l = 0; l < d; ++l) {
            sum[static_cast<std::size_t>(l)] =
                f.add(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)],
                      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
            diff[static_cast<std::size_t>(l)] =
                f.sub(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)],
                      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
          }
          consider(sum);
          consider(diff);
        }
      }
    }

    SkewRingElement seed = space.element(field, scalars_of(f, best));
    SkewRingElement certificate =
        unit_projection_witness(space, field, seed, unit_set, guards);

    // sandwich into the corner and re-verify everything the construction
    // promises
    const auto e = values_of(f, space.coords(unit_indicator(space, field, unit_set)));
    auto rp = mul_coords(space, f, mul_coords(space, f, e, values_of(f, space.coords(certificate))), e);

    const GroupElement zero = space.action().group().zero();
    for (int x = 0; x < space.action().size(); ++x) {
      auto expected =
          std::binary_search(unit_set.begin(), unit_set.end(), x) ? f.one() : f.zero();
      if (rp[static_cast<std::size_t>(space.basis_index(zero, x))] != expected)
        fail(ErrorCode::SearchExhausted, "central certificate has the wrong zero component");
    }
    RowBasis<FType> jspan(f, d);
    for (const auto& row : rows) jspan.insert(row);
    if (!jspan.contains(rp))
      fail(ErrorCode::NotAnIdeal, "central certificate escaped the ideal");
    // commutation against the corner basis
    SubspaceBasis corner_rows_basis = corner_basis(space, field, unit_set);
    for (const auto& wrow : corner_rows_basis.rows) {
      auto w = values_of(f, wrow);
      auto lhs = mul_coords(space, f, rp, w);
      auto rhs = mul_coords(space, f, w, rp);
      if (lhs != rhs)
        fail(ErrorCode::SearchExhausted,
             "central certificate fails to commute with the corner");
    }
    return space.element(field, scalars_of(f, rp));
  });
}

IdealSubspace nonfree_obstruction(const RingSpace& space, const FieldSpec& field, int x,
                                  const GroupElement& g, const Guards& guards) {
  (void)guards;
  const PartialAction& action = space.action();
  if (x < 0 || x >= action.size())
    fail(ErrorCode::InvalidArgument, "point index out of range");
  if (action.group().is_zero(g))
    fail(ErrorCode::InvalidArgument, "the obstruction needs a nonzero group element");
  if (action.maybe_apply(g, x) != x)
    fail(ErrorCode::NotAFixedPoint,
         "'" + action.label(x) + "' is not a fixed point of h_{" + g.key() + "}");

  const FinSuppFunction chi =
      FinSuppFunction::indicator(field, action.size(), {x});
  SkewRingElement generator = SkewRingElement::monomial(action.group().zero(), chi) -
                              SkewRingElement::monomial(g, chi);
  return ideal_closure(space, field, {generator});
}

} // namespace skewlab
