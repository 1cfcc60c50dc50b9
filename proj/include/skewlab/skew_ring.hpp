#ifndef SKEWLAB_SKEW_RING_HPP
#define SKEWLAB_SKEW_RING_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "skewlab/fin_supp.hpp"
#include "skewlab/guards.hpp"
#include "skewlab/linalg.hpp"
#include "skewlab/partial_action.hpp"

namespace skewlab {

// The action induced on F_0(X): alpha_t maps D_{-t} = F_0(X_{-t}) onto
// D_t = F_0(X_t) by alpha_t(f) = f after h_{-t}.
class InducedAction {
public:
  InducedAction(const PartialAction& action, const FieldSpec& field)
      : action_(&action), field_(field) {}
  // the action is referenced, not copied; temporaries would dangle
  InducedAction(PartialAction&&, const FieldSpec&) = delete;

  const PartialAction& action() const { return *action_; }
  const FieldSpec& field() const { return field_; }

  // Throws DomainViolation when supp(f) is not inside X_{-t}.
  FinSuppFunction apply(const GroupElement& t, const FinSuppFunction& f) const;

private:
  const PartialAction* action_;
  FieldSpec field_;
};

// Element of the partial skew group ring F_0(X) x_alpha G: a finite formal
// sum of terms f_t delta_t.  The membership condition supp(f_t) inside X_t is
// not enforced per mutation; multiplication and coordinate conversion check
// it where it matters.
class SkewRingElement {
public:
  SkewRingElement(const FieldSpec& field, int width) : field_(field), width_(width) {}

  static SkewRingElement monomial(const GroupElement& t, const FinSuppFunction& f) {
    SkewRingElement out(f.field(), f.width());
    out.set_term(t, f);
    return out;
  }

  const FieldSpec& field() const { return field_; }
  int width() const { return width_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GroupElement, FinSuppFunction>& terms() const { return terms_; }

  // P_t projection: the coefficient of delta_t.
  FinSuppFunction component(const GroupElement& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? FinSuppFunction(field_, width_) : it->second;
  }

  void set_term(const GroupElement& t, const FinSuppFunction& f);
  void add_term(const GroupElement& t, const FinSuppFunction& f) {
    set_term(t, component(t) + f);
  }

  std::vector<GroupElement> group_support() const {
    std::vector<GroupElement> out;
    for (const auto& [t, f] : terms_) out.push_back(t);
    return out;
  }

  // number of group elements carrying a nonzero coefficient
  int group_support_size() const { return static_cast<int>(terms_.size()); }

  // sum over t of f_t, an element of F_0(X)
  FinSuppFunction coefficient_sum() const {
    FinSuppFunction out(field_, width_);
    for (const auto& [t, f] : terms_) out = out + f;
    return out;
  }

  friend SkewRingElement operator+(const SkewRingElement& a, const SkewRingElement& b);
  friend SkewRingElement operator-(const SkewRingElement& a, const SkewRingElement& b);
  SkewRingElement operator-() const;
  friend SkewRingElement operator*(const Scalar& c, const SkewRingElement& a);

  bool operator==(const SkewRingElement&) const = default;

private:
  void check_compatible(const SkewRingElement& other) const;

  FieldSpec field_;
  int width_;
  std::map<GroupElement, FinSuppFunction> terms_;
};

// ring multiplication: (f_t delta_t)(g_s delta_s) = alpha_t(alpha_{-t}(f_t) g_s) delta_{t+s}
SkewRingElement ring_mul(const InducedAction& alpha, const SkewRingElement& a,
                         const SkewRingElement& b);

// Throws DomainViolation unless supp(f_t) is inside X_t for every term.
void require_member(const PartialAction& action, const SkewRingElement& a);

// Finite-dimensional coordinate view of the ring.  The canonical basis is
// all chi_x delta_t with x in X_t, ordered by (t, x); products of basis
// monomials are again basis monomials or zero with coefficient one,
//   (chi_x delta_t)(chi_y delta_s) = [h_{-t}(x) = y] chi_x delta_{t+s},
// so the whole multiplication is captured by an integer table independent of
// the coefficient field.
class RingSpace {
public:
  struct BasisMonomial {
    GroupElement t;
    int x;
  };

  explicit RingSpace(const PartialAction& action, const Guards& guards = {});
  // the action is referenced, not copied; temporaries would dangle
  explicit RingSpace(PartialAction&&, const Guards& = {}) = delete;

  const PartialAction& action() const { return *action_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisMonomial>& basis() const { return basis_; }
  int basis_index(const GroupElement& t, int x) const; // -1 when absent

  // index of the product of basis monomials, or -1 for zero
  int table(int i, int j) const { return table_[static_cast<std::size_t>(i) * basis_.size() + j]; }

  std::vector<Scalar> coords(const SkewRingElement& a) const;
  SkewRingElement element(const FieldSpec& field, const std::vector<Scalar>& coords) const;
  SkewRingElement basis_element(const FieldSpec& field, int i) const;

private:
  const PartialAction* action_;
  std::vector<BasisMonomial> basis_;
  std::map<GroupElement, std::map<int, int>> index_;
  std::vector<std::int32_t> table_;
};

// Row-reduced basis of a subspace of the ring in canonical coordinates.
// RREF makes the representation of a subspace unique, which keeps reports
// deterministic.
struct SubspaceBasis {
  FieldSpec field;
  int width = 0;
  std::vector<std::vector<Scalar>> rows;
  int dim() const { return static_cast<int>(rows.size()); }
};

bool subspace_contains(const SubspaceBasis& basis, const std::vector<Scalar>& v);

// coordinate-level products via the structure table

template <class F>
std::vector<typename F::Value> mul_coords(const RingSpace& space, const F& f,
                                          const std::vector<typename F::Value>& u,
                                          const std::vector<typename F::Value>& v) {
  std::vector<typename F::Value> w(space.dim(), f.zero());
  for (int i = 0; i < space.dim(); ++i) {
    if (f.is_zero(u[i])) continue;
    for (int j = 0; j < space.dim(); ++j) {
      if (f.is_zero(v[j])) continue;
      int k = space.table(i, j);
      if (k >= 0) w[k] = f.add(w[k], f.mul(u[i], v[j]));
    }
  }
  return w;
}

template <class F>
std::vector<typename F::Value> mul_basis_left(const RingSpace& space, const F& f, int k,
                                              const std::vector<typename F::Value>& v) {
  std::vector<typename F::Value> w(space.dim(), f.zero());
  for (int j = 0; j < space.dim(); ++j) {
    if (f.is_zero(v[j])) continue;
    int idx = space.table(k, j);
    if (idx >= 0) w[idx] = f.add(w[idx], v[j]);
  }
  return w;
}

template <class F>
std::vector<typename F::Value> mul_basis_right(const RingSpace& space, const F& f,
                                               const std::vector<typename F::Value>& v, int k) {
  std::vector<typename F::Value> w(space.dim(), f.zero());
  for (int j = 0; j < space.dim(); ++j) {
    if (f.is_zero(v[j])) continue;
    int idx = space.table(j, k);
    if (idx >= 0) w[idx] = f.add(w[idx], v[j]);
  }
  return w;
}

// chi_A delta_0 as a ring element; A holds point indices.
SkewRingElement unit_indicator(const RingSpace& space, const FieldSpec& field,
                               const std::vector<int>& points);

// basis of the corner e R e for e = chi_A delta_0; spanned by the basis
// monomials chi_x delta_t with x in A and h_{-t}(x) in A
SubspaceBasis corner_basis(const RingSpace& space, const FieldSpec& field,
                           const std::vector<int>& points);

// center of that corner, computed as the commutant inside the corner
SubspaceBasis center_of_corner(const RingSpace& space, const FieldSpec& field,
                               const std::vector<int>& points);

struct FieldCheckResult {
  bool is_field;
  int center_dim;
  std::optional<SkewRingElement> witness; // nonzero central element with no inverse
};

// Decides whether the center of the corner at chi_A delta_0 is a field by
// exhausting its nonzero elements; finite fields only.
FieldCheckResult corner_center_field_check(const RingSpace& space, const FieldSpec& field,
                                           const std::vector<int>& points,
                                           const Guards& guards = {});

// Cross-checks the structure table against element-level multiplication on
// all basis pairs, then checks associativity on all basis triples.  Returns
// the first offending triple, or nullopt when everything associates.
std::optional<std::array<int, 3>> associativity_witness(const RingSpace& space,
                                                        const FieldSpec& field);

} // namespace skewlab

#endif
