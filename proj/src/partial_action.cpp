#include "skewlab/partial_action.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace skewlab {

namespace {

std::string set_to_string(const PartialAction& action, const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += action.label(xs[i]);
  }
  return out + "}";
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

PartialAction::PartialAction(GroupSpec group, std::vector<std::string> labels,
                             const std::map<GroupElement, std::vector<std::string>>& domains,
                             const std::map<GroupElement, std::map<std::string, std::string>>& maps)
    : group_(std::move(group)), labels_(std::move(labels)) {
  if (labels_.empty()) fail(ErrorCode::EmptySet, "the underlying set X is empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      fail(ErrorCode::MalformedInstance, "empty point label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      fail(ErrorCode::MalformedInstance, "duplicate point label '" + labels_[i] + "'");
  }

  auto resolve = [&](const std::string& label) {
    auto it = index_.find(label);
    if (it == index_.end())
      fail(ErrorCode::MalformedInstance, "label '" + label + "' is not in the set");
    return it->second;
  };
  auto check_arity = [&](const GroupElement& t) {
    if (t.arity() != group_.arity())
      fail(ErrorCode::MalformedInstance,
           "group element '" + t.key() + "' does not match the group");
  };

  for (const auto& [t, labels_of_t] : domains) {
    check_arity(t);
    std::vector<int> dom;
    for (const std::string& label : labels_of_t) dom.push_back(resolve(label));
    std::sort(dom.begin(), dom.end());
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
      fail(ErrorCode::MalformedInstance,
           "duplicate label in the domain for '" + t.key() + "'");
    if (dom.empty() && !group_.is_zero(t)) continue; // absent and empty mean the same
    slices_[t].domain = std::move(dom);
  }

  for (const auto& [t, pairs] : maps) {
    check_arity(t);
    if (pairs.empty()) continue;
    Slice& slice = slices_[t]; // may create a domain-less slice; validation flags it
    slice.fwd.assign(labels_.size(), -1);
    for (const auto& [from, to] : pairs) {
      int x = resolve(from);
      int y = resolve(to);
      if (slice.fwd[x] != -1)
        fail(ErrorCode::MalformedInstance,
             "duplicate map entry for '" + from + "' under '" + t.key() + "'");
      slice.fwd[x] = y;
    }
  }

  // identity slice: insert when absent, otherwise leave whatever was given
  // for the validator to judge
  const GroupElement zero = group_.zero();
  if (slices_.find(zero) == slices_.end()) {
    Slice id;
    id.domain.resize(labels_.size());
    id.fwd.resize(labels_.size());
    for (int x = 0; x < size(); ++x) {
      id.domain[x] = x;
      id.fwd[x] = x;
    }
    slices_[zero] = std::move(id);
  } else if (!slices_[zero].has_map()) {
    Slice& slice = slices_[zero];
    slice.fwd.assign(labels_.size(), -1);
    for (int x : slice.domain) slice.fwd[x] = x;
  }

  // derive h_{-t} as the inverse wherever only one direction was stored and
  // the stored direction actually inverts
  for (auto& [t, slice] : slices_) {
    if (group_.is_zero(t) || !slice.has_map()) continue;
    auto inv_it = slices_.find(group_.neg(t));
    if (inv_it == slices_.end() || inv_it->second.has_map()) continue;
    std::vector<int> back(labels_.size(), -1);
    bool injective = true;
    for (int x = 0; x < size(); ++x) {
      int y = slice.fwd[x];
      if (y < 0) continue;
      if (back[y] != -1) { injective = false; break; }
      back[y] = x;
    }
    if (injective) inv_it->second.fwd = std::move(back);
  }
}

int PartialAction::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    fail(ErrorCode::UnknownLabel, "label '" + label + "' is not in the set");
  return it->second;
}

std::vector<GroupElement> PartialAction::effective_support() const {
  std::vector<GroupElement> out;
  out.reserve(slices_.size());
  for (const auto& [t, slice] : slices_) out.push_back(t);
  return out; // std::map keys are already sorted
}

const std::vector<int>& PartialAction::domain(const GroupElement& t) const {
  static const std::vector<int> kEmpty;
  auto it = slices_.find(t);
  return it == slices_.end() ? kEmpty : it->second.domain;
}

bool PartialAction::in_domain(const GroupElement& t, int x) const {
  const std::vector<int>& dom = domain(t);
  return std::binary_search(dom.begin(), dom.end(), x);
}

int PartialAction::maybe_apply(const GroupElement& t, int x) const {
  auto it = slices_.find(t);
  if (it == slices_.end() || !it->second.has_map()) return -1;
  if (x < 0 || x >= size()) return -1;
  return it->second.fwd[x];
}

int PartialAction::apply(const GroupElement& t, int x) const {
  int y = maybe_apply(t, x);
  if (y < 0)
    fail(ErrorCode::DomainViolation,
         "h_{" + t.key() + "} is undefined at '" + label(x) + "'");
  return y;
}

std::int64_t PartialAction::ring_dim() const {
  std::int64_t dim = 0;
  for (const auto& [t, slice] : slices_) dim += static_cast<std::int64_t>(slice.domain.size());
  return dim;
}

std::string ActionViolation::axiom_name() const {
  switch (axiom) {
    case Axiom::IdentitySlice: return "identity-slice";
    case Axiom::Bijection: return "bijection";
    case Axiom::Compatibility: return "compatibility";
    case Axiom::Composition: return "composition";
    case Axiom::SupportSymmetry: return "support-symmetry";
  }
  return "unknown";
}

ValidationReport validate_action(const PartialAction& action) {
  ValidationReport report;
  auto flag = [&](ActionViolation::Axiom axiom, std::string detail) {
    report.violations.push_back({axiom, std::move(detail)});
  };

  const GroupSpec& g = action.group();
  const GroupElement zero = g.zero();
  const std::vector<GroupElement> support = action.effective_support();

  // X_0 = X and h_0 = id
  {
    const std::vector<int>& dom = action.domain(zero);
    if (static_cast<int>(dom.size()) != action.size()) {
      flag(ActionViolation::Axiom::IdentitySlice,
           "X_0 = " + set_to_string(action, dom) + " does not cover X");
    }
    for (int x : dom) {
      int y = action.maybe_apply(zero, x);
      if (y != x)
        flag(ActionViolation::Axiom::IdentitySlice,
             "h_0('" + action.label(x) + "') is " +
                 (y < 0 ? std::string("undefined") : "'" + action.label(y) + "'"));
    }
  }

  // X_t nonempty iff X_{-t} nonempty
  for (const GroupElement& t : support) {
    if (!action.domain(t).empty() && action.domain(g.neg(t)).empty())
      flag(ActionViolation::Axiom::SupportSymmetry,
           "X_{" + t.key() + "} is nonempty but X_{" + g.neg(t).key() + "} is empty");
  }

  // h_t is a bijection X_{-t} -> X_t
  for (const GroupElement& t : support) {
    if (g.is_zero(t)) continue; // covered by the identity check
    const std::vector<int>& source = action.domain(g.neg(t));
    const std::vector<int>& target = action.domain(t);
    std::vector<int> image;
    bool defined_everywhere = true;
    std::set<int> seen;
    for (int x = 0; x < action.size(); ++x) {
      int y = action.maybe_apply(t, x);
      bool in_source = std::binary_search(source.begin(), source.end(), x);
      if (y < 0) {
        if (in_source) defined_everywhere = false;
        continue;
      }
      if (!in_source) {
        flag(ActionViolation::Axiom::Bijection,
             "h_{" + t.key() + "} is defined at '" + action.label(x) +
                 "' outside X_{" + g.neg(t).key() + "}");
        continue;
      }
      if (!seen.insert(y).second)
        flag(ActionViolation::Axiom::Bijection,
             "h_{" + t.key() + "} maps two points to '" + action.label(y) + "'");
      image.push_back(y);
    }
    if (!defined_everywhere)
      flag(ActionViolation::Axiom::Bijection,
           "h_{" + t.key() + "} is not defined on all of X_{" + g.neg(t).key() + "}");
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != target)
      flag(ActionViolation::Axiom::Bijection,
           "image of h_{" + t.key() + "} is " + set_to_string(action, image) +
               ", expected X_{" + t.key() + "} = " + set_to_string(action, target));
  }

  // quantifying t, s over the stored support is enough: every slice outside
  // it is empty, which makes the remaining instances of both axioms vacuous
  // or equivalent to one already checked
  for (const GroupElement& t : support) {
    for (const GroupElement& s : support) {
      const GroupElement ts = g.add(t, s);

      // h_t(X_{-t} n X_s) = X_t n X_{t+s}
      std::vector<int> lhs;
      bool lhs_total = true;
      for (int x : sorted_intersection(action.domain(g.neg(t)), action.domain(s))) {
        int y = action.maybe_apply(t, x);
        if (y < 0) { lhs_total = false; continue; }
        lhs.push_back(y);
      }
      std::sort(lhs.begin(), lhs.end());
      lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
      std::vector<int> rhs = sorted_intersection(action.domain(t), action.domain(ts));
      if (lhs_total && lhs != rhs)
        flag(ActionViolation::Axiom::Compatibility,
             "h_{" + t.key() + "}(X_{" + g.neg(t).key() + "} n X_{" + s.key() + "}) = " +
                 set_to_string(action, lhs) + ", expected " + set_to_string(action, rhs));

      // h_t(h_s(x)) = h_{t+s}(x) on X_{-s} n X_{-s-t}
      for (int x : sorted_intersection(action.domain(g.neg(s)), action.domain(g.neg(ts)))) {
        int mid = action.maybe_apply(s, x);
        int direct = action.maybe_apply(ts, x);
        int chained = mid < 0 ? -1 : action.maybe_apply(t, mid);
        if (mid < 0 || chained < 0 || direct < 0 || chained != direct)
          flag(ActionViolation::Axiom::Composition,
               "h_{" + t.key() + "}(h_{" + s.key() + "}('" + action.label(x) +
                   "')) disagrees with h_{" + ts.key() + "}('" + action.label(x) + "')");
      }
    }
  }

  return report;
}

void require_valid(const PartialAction& action) {
  ValidationReport report = validate_action(action);
  if (!report.ok())
    fail(ErrorCode::InvalidAction,
         report.violations.front().axiom_name() + ": " + report.violations.front().detail);
}

std::vector<int> orbit_of(const PartialAction& action, int x) {
  if (x < 0 || x >= action.size())
    fail(ErrorCode::InvalidArgument, "point index out of range");
  const std::vector<GroupElement> support = action.effective_support();
  std::vector<bool> seen(action.size(), false);
  std::deque<int> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    for (const GroupElement& t : support) {
      int z = action.maybe_apply(t, y);
      if (z >= 0 && !seen[z]) {
        seen[z] = true;
        queue.push_back(z);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < action.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> orbits(const PartialAction& action) {
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(action.size(), false);
  for (int x = 0; x < action.size(); ++x) {
    if (covered[x]) continue;
    std::vector<int> orbit = orbit_of(action, x);
    for (int y : orbit) covered[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

MinimalityResult is_minimal(const PartialAction& action) {
  std::vector<std::vector<int>> classes = orbits(action);
  if (classes.size() == 1) return {true, {}};
  return {false, classes.front()};
}

std::vector<int> fixed_points(const PartialAction& action, const GroupElement& t) {
  std::vector<int> out;
  for (int x = 0; x < action.size(); ++x)
    if (action.maybe_apply(t, x) == x) out.push_back(x);
  return out;
}

FreenessResult is_free(const PartialAction& action) {
  // only t in the effective support can have fixed points: elsewhere
  // X_{-t} is empty
  for (const GroupElement& t : action.effective_support()) {
    if (action.group().is_zero(t)) continue;
    std::vector<int> fixed = fixed_points(action, t);
    if (!fixed.empty())
      return {false, false, std::make_pair(fixed.front(), t)};
  }
  return {true, true, std::nullopt};
}

bool is_invariant_subset(const PartialAction& action, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (const GroupElement& t : action.effective_support()) {
    for (int x : sorted) {
      int y = action.maybe_apply(t, x);
      if (y >= 0 && !std::binary_search(sorted.begin(), sorted.end(), y)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> invariant_subsets(const PartialAction& action,
                                                const Guards& guards) {
  if (action.size() > guards.max_set)
    fail(ErrorCode::TooLarge, "invariant-subset enumeration needs |X| <= max_set = " +
                                  std::to_string(guards.max_set) + ", got " +
                                  std::to_string(action.size()));
  const std::vector<std::vector<int>> classes = orbits(action);
  const std::size_t k = classes.size();
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i))
        subset.insert(subset.end(), classes[i].begin(), classes[i].end());
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  return out;
}

PartialAction restrict_action(const PartialAction& action, const std::vector<int>& keep) {
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) fail(ErrorCode::EmptySet, "restriction to the empty set");
  if (kept.front() < 0 || kept.back() >= action.size())
    fail(ErrorCode::InvalidArgument, "restriction index out of range");

  std::vector<std::string> labels;
  for (int x : kept) labels.push_back(action.label(x));
  auto in_kept = [&](int x) { return std::binary_search(kept.begin(), kept.end(), x); };

  const GroupSpec& g = action.group();
  std::map<GroupElement, std::vector<std::string>> domains;
  std::map<GroupElement, std::map<std::string, std::string>> maps;
  for (const auto& [t, slice] : action.slices()) {
    if (g.is_zero(t)) continue;
    std::vector<std::string> dom;
    std::map<std::string, std::string> fwd;
    for (int x : action.domain(g.neg(t))) {
      if (!in_kept(x)) continue;
      int y = action.apply(t, x);
      if (!in_kept(y)) continue;
      dom.push_back(action.label(y));
      fwd[action.label(x)] = action.label(y);
    }
    if (dom.empty()) continue;
    domains[t] = std::move(dom);
    maps[t] = std::move(fwd);
  }
  return PartialAction(g, std::move(labels), domains, maps);
}

PartialAction global_action(const GroupSpec& group, std::vector<std::string> labels,
                            const std::map<GroupElement, std::vector<int>>& perms) {
  std::map<GroupElement, std::vector<std::string>> domains;
  std::map<GroupElement, std::map<std::string, std::string>> maps;
  for (const GroupElement& t : group.enumerate()) {
    if (group.is_zero(t)) continue;
    auto it = perms.find(t);
    if (it == perms.end())
      fail(ErrorCode::InvalidArgument, "no permutation for group element " + t.key());
    const std::vector<int>& perm = it->second;
    if (perm.size() != labels.size())
      fail(ErrorCode::InvalidArgument, "permutation size mismatch for " + t.key());
    std::vector<std::string> dom(labels.begin(), labels.end());
    std::map<std::string, std::string> fwd;
    for (std::size_t x = 0; x < labels.size(); ++x)
      fwd[labels[x]] = labels.at(static_cast<std::size_t>(perm[x]));
    domains[t] = std::move(dom);
    maps[t] = std::move(fwd);
  }
  return PartialAction(group, std::move(labels), domains, maps);
}

PartialAction make_shift_window(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "window size must be positive");
  GroupSpec z(1, {});
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::map<GroupElement, std::vector<std::string>> domains;
  std::map<GroupElement, std::map<std::string, std::string>> maps;
  for (int t = -(n - 1); t <= n - 1; ++t) {
    if (t == 0) continue;
    GroupElement g = z.element({t});
    std::vector<std::string> dom;
    std::map<std::string, std::string> fwd;
    for (int x = std::max(1, 1 + t); x <= std::min(n, n + t); ++x)
      dom.push_back(std::to_string(x));
    for (int x = std::max(1, 1 - t); x <= std::min(n, n - t); ++x)
      fwd[std::to_string(x)] = std::to_string(x + t);
    domains[g] = std::move(dom);
    maps[g] = std::move(fwd);
  }
  return PartialAction(z, std::move(labels), domains, maps);
}

} // namespace skewlab
