#ifndef SKEWLAB_PARTIAL_ACTION_HPP
#define SKEWLAB_PARTIAL_ACTION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/group.hpp"
#include "skewlab/guards.hpp"

namespace skewlab {

// Partial action of an abelian group G on a finite set X: a family of
// subsets X_t together with bijections h_t : X_{-t} -> X_t.  Only finitely
// many X_t are nonempty, so slices are stored sparsely; the t = 0 slice is
// always the identity on X once an instance validates.
class PartialAction {
public:
  struct Slice {
    std::vector<int> domain; // X_t as sorted point indices
    std::vector<int> fwd;    // h_t over all points, -1 undefined; empty = no map given
    bool has_map() const { return !fwd.empty(); }
    bool operator==(const Slice&) const = default;
  };

  // Label-level constructor matching the wire format.  Resolves labels to
  // indices, auto-inserts the identity slice when no 0-entry is given, and
  // derives h_{-t} from h_t when only one direction is stored.  Structural
  // problems (unknown labels, duplicates, empty X) throw MalformedInstance;
  // axiom violations are left for validate_action to report.
  PartialAction(GroupSpec group, std::vector<std::string> labels,
                const std::map<GroupElement, std::vector<std::string>>& domains,
                const std::map<GroupElement, std::map<std::string, std::string>>& maps);

  const GroupSpec& group() const { return group_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
  int index_of(const std::string& label) const;

  // Group elements with a stored slice, sorted; contains 0.  For valid
  // instances this is exactly {t : X_t nonempty}.
  std::vector<GroupElement> effective_support() const;

  bool has_slice(const GroupElement& t) const { return slices_.count(t) > 0; }
  const std::vector<int>& domain(const GroupElement& t) const; // X_t; empty if absent
  bool in_domain(const GroupElement& t, int x) const;

  // h_t(x), or -1 when undefined.
  int maybe_apply(const GroupElement& t, int x) const;
  // h_t(x); throws DomainViolation when x is outside X_{-t}.
  int apply(const GroupElement& t, int x) const;

  std::int64_t ring_dim() const; // sum over t of |X_t|

  const std::map<GroupElement, Slice>& slices() const { return slices_; }

  bool operator==(const PartialAction&) const = default;

private:
  GroupSpec group_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::map<GroupElement, Slice> slices_;
};

struct ActionViolation {
  enum class Axiom {
    IdentitySlice,     // X_0 = X with h_0 = id
    Bijection,         // h_t a bijection X_{-t} -> X_t
    Compatibility,     // h_t(X_{-t} n X_s) = X_t n X_{t+s}
    Composition,       // h_t(h_s(x)) = h_{t+s}(x) on X_{-s} n X_{-s-t}
    SupportSymmetry,   // X_t nonempty iff X_{-t} nonempty
  };
  Axiom axiom;
  std::string detail; // human-readable witness

  std::string axiom_name() const;
};

struct ValidationReport {
  std::vector<ActionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks all axioms, quantifying t and s over the stored support S.  That is
// sound: slices outside S are empty, which makes every instance of each
// axiom involving them vacuous or an instance already covered inside S.
ValidationReport validate_action(const PartialAction& action);

// Throws InvalidAction carrying the first violation.
void require_valid(const PartialAction& action);

// Orbit of x under single h_t steps, sorted.  For valid actions single-step
// reachability is already symmetric and transitive (composition plus the
// identity slice), so these are genuine equivalence classes.
std::vector<int> orbit_of(const PartialAction& action, int x);

// All orbits, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits(const PartialAction& action);

struct MinimalityResult {
  bool minimal;
  std::vector<int> witness; // a proper orbit when not minimal
};
MinimalityResult is_minimal(const PartialAction& action);

// {x in X_{-t} : h_t(x) = x}, sorted.
std::vector<int> fixed_points(const PartialAction& action, const GroupElement& t);

struct FreenessResult {
  bool free;
  // In the discrete topology a fixed-point set has empty interior exactly
  // when it is empty, so this always agrees with `free` on finite X.
  bool topologically_free;
  std::optional<std::pair<int, GroupElement>> witness; // fixed x under t != 0
};
FreenessResult is_free(const PartialAction& action);

// V is invariant when h_t(V n X_{-t}) stays inside V for every t.
bool is_invariant_subset(const PartialAction& action, const std::vector<int>& subset);

// All invariant subsets (including the empty set and X), each sorted.
// These are exactly the unions of orbits.  Guarded by guards.max_set.
std::vector<std::vector<int>> invariant_subsets(const PartialAction& action,
                                                const Guards& guards = {});

// Restriction of a valid action to a subset of X, keeping label names:
// X'_t = {x in X_t n X' : h_{-t}(x) in X'}.  Restriction of a valid action
// is again valid.
PartialAction restrict_action(const PartialAction& action, const std::vector<int>& keep);

// Global (everywhere-defined) action of a finite group: perms[t] is the
// permutation x -> t.x of label indices, one entry per group element.
PartialAction global_action(const GroupSpec& group, std::vector<std::string> labels,
                            const std::map<GroupElement, std::vector<int>>& perms);

// Z acting by n -> n+1 on {1, ..., n}, partially: X_t is the window where
// the shift by t stays inside.  The associated ring has dimension n^2.
PartialAction make_shift_window(int n);

} // namespace skewlab

#endif
