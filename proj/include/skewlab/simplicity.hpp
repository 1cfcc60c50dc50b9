#ifndef SKEWLAB_SIMPLICITY_HPP
#define SKEWLAB_SIMPLICITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/skew_ring.hpp"

namespace skewlab {

// Two-sided ideal given by a row-reduced basis.  The closure flags record
// the outcome of an explicit re-verification pass, not an assumption.
struct IdealSubspace {
  SubspaceBasis basis;
  bool left_closed = false;
  bool right_closed = false;
};

// Smallest two-sided ideal containing the generators: alternate one-sided
// multiplications by basis monomials until the span stops growing.  The
// monomials span R, so the fixpoint is closed under multiplication by
// everything.
IdealSubspace ideal_closure(const RingSpace& space, const FieldSpec& field,
                            const std::vector<SkewRingElement>& generators);

// Re-checks closure of a spanned subspace under all monomial products.
std::pair<bool, bool> verify_ideal(const RingSpace& space, const SubspaceBasis& basis);

struct OracleVerdict {
  bool simple;
  std::int64_t scanned = 0;                 // 1-dim subspaces examined
  std::optional<SkewRingElement> generator; // generates the proper ideal below
  std::optional<IdealSubspace> proper_ideal;
};

// Brute-force simplicity oracle over GF(p): every 1-dimensional subspace is
// represented by its unique vector with first nonzero coordinate 1; reps are
// scanned in pivot-position-then-lexicographic order, and the ring is simple
// iff every closure is the whole ring.  The max_subspaces guard is charged
// lazily per scanned representative, so an early proper ideal still yields a
// verdict on rings whose full scan would be out of reach.
OracleVerdict is_simple_oracle(const RingSpace& space, const FieldSpec& field,
                               const Guards& guards = {});

struct GSimplicityResult {
  bool g_simple;
  std::vector<int> witness_set; // proper nonempty invariant subset when not G-simple
};

// F_0(X) has no nontrivial invariant ideal.  Ideals of F_0(X) are exactly
// the coordinate subspaces F_0(V), so this enumerates subsets and tests
// invariance of the corresponding ideal by linear algebra -- deliberately
// not through the orbit partition, so minimality has an independent route
// to be checked against.
GSimplicityResult is_G_simple(const PartialAction& action, const FieldSpec& field,
                              const Guards& guards = {});

struct CorrespondenceResult {
  bool set_route;   // h_t(V n X_{-t}) stays in V
  bool ideal_route; // alpha_t(F_0(V) n D_{-t}) stays in F_0(V)
};

// The two invariance notions must coincide for every subset V.
CorrespondenceResult invariance_correspondence(const PartialAction& action,
                                               const FieldSpec& field,
                                               const std::vector<int>& subset);

struct CriteriaVerdict {
  bool minimal;
  std::vector<int> minimality_witness; // proper orbit
  bool free;
  std::optional<std::pair<int, GroupElement>> freeness_witness; // fixed point
  bool g_simple;
  std::vector<int> g_simple_witness;
  // finite fields only; nullopt when the coefficient field cannot be
  // exhausted
  std::optional<bool> corners_are_fields;
  std::vector<std::vector<int>> non_field_units; // unit sets A whose corner center fails
  std::optional<SkewRingElement> non_field_witness;

  // minimality + freeness characterize simplicity dynamically
  bool dynamical_simple() const { return minimal && free; }
  // G-simplicity + corner centers being fields characterize it algebraically
  std::optional<bool> algebraic_simple() const {
    if (!corners_are_fields) return std::nullopt;
    return g_simple && *corners_are_fields;
  }
  bool routes_agree() const {
    auto alg = algebraic_simple();
    return !alg || *alg == dynamical_simple();
  }
};

// Evaluates both characterizations of simplicity directly on the action.
CriteriaVerdict simplicity_criteria(const RingSpace& space, const FieldSpec& field,
                                    const Guards& guards = {});

enum class DecisionMethod { Oracle, Criteria, Both };

struct SimplicityDecision {
  std::optional<OracleVerdict> oracle;
  std::optional<CriteriaVerdict> criteria;
  bool simple;
  bool agree; // every computed route reached the same verdict
};

SimplicityDecision decide_simplicity(const RingSpace& space, const FieldSpec& field,
                                     DecisionMethod method, const Guards& guards = {});

// Given nonzero r and nonempty A with F_0(X) G-simple, produces r' in the
// ideal generated by r with P_0(r') = chi_A delta_0 and group support inside
// the group support of the massaged generator.  Levels of the product
// search: the span of monomial sandwiches of r stabilizes by the third
// level, so hitting the depth cap means the certificate genuinely does not
// exist in the generated ideal.
SkewRingElement unit_projection_witness(const RingSpace& space, const FieldSpec& field,
                                        const SkewRingElement& r, const std::vector<int>& unit_set,
                                        const Guards& guards = {});

// Given a nonzero verified ideal J and nonempty A, produces r' in J that is
// central in the corner at chi_A delta_0 and has P_0(r') = chi_A delta_0.
// Seeds the unit-projection search with an element of J of minimal group
// support; that minimality is what forces centrality, and the result is
// re-verified rather than trusted.
SkewRingElement central_ideal_witness(const RingSpace& space, const FieldSpec& field,
                                      const IdealSubspace& J, const std::vector<int>& unit_set,
                                      const Guards& guards = {});

// For a fixed point x of h_g, g != 0, the ideal generated by
// chi_x delta_0 - chi_x delta_g.  Every element of it has vanishing
// coefficient sum, so it is proper and witnesses non-simplicity of rings
// over non-free actions.
IdealSubspace nonfree_obstruction(const RingSpace& space, const FieldSpec& field, int x,
                                  const GroupElement& g, const Guards& guards = {});

} // namespace skewlab

#endif
