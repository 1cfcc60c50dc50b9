#include "skewlab/corpus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace skewlab {

namespace {

std::vector<std::string> default_labels(int n) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(kNames[i]);
  return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool power_is_identity(const std::vector<int>& perm, std::int64_t n) {
  std::vector<int> acc = identity_perm(static_cast<int>(perm.size()));
  for (std::int64_t i = 0; i < n; ++i) acc = compose(perm, acc);
  return acc == identity_perm(static_cast<int>(perm.size()));
}

bool commute(const std::vector<int>& a, const std::vector<int>& b) {
  return compose(a, b) == compose(b, a);
}

// all tuples of generator permutations compatible with the torsion relations
void generator_tuples(const GroupSpec& group, int n, std::size_t at,
                      std::vector<std::vector<int>>& current,
                      std::vector<std::vector<std::vector<int>>>& out) {
  if (at == group.torsion().size()) {
    out.push_back(current);
    return;
  }
  std::vector<int> perm = identity_perm(n);
  do {
    if (!power_is_identity(perm, group.torsion()[at])) continue;
    bool ok = true;
    for (const auto& earlier : current)
      if (!commute(perm, earlier)) { ok = false; break; }
    if (!ok) continue;
    current.push_back(perm);
    generator_tuples(group, n, at + 1, current, out);
    current.pop_back();
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::map<GroupElement, std::vector<int>> action_from_generators(
    const GroupSpec& group, int n, const std::vector<std::vector<int>>& gens) {
  std::map<GroupElement, std::vector<int>> out;
  for (const GroupElement& t : group.enumerate()) {
    std::vector<int> perm = identity_perm(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::int64_t c = 0; c < t.coords()[i]; ++c) perm = compose(gens[i], perm);
    out[t] = std::move(perm);
  }
  return out;
}

// canonical form of an instance up to relabeling: the lexicographically
// smallest serialization over all permutations of the points
std::string canonical_form(const PartialAction& action) {
  const int n = action.size();
  std::vector<int> perm = identity_perm(n);
  std::string best;
  do {
    std::string s = std::to_string(action.group().free_rank());
    for (std::int64_t t : action.group().torsion()) s += "." + std::to_string(t);
    s += "|" + std::to_string(n);
    for (const auto& [t, slice] : action.slices()) {
      s += "|" + t.key() + ":";
      std::vector<int> dom;
      for (int x : slice.domain) dom.push_back(perm[static_cast<std::size_t>(x)]);
      std::sort(dom.begin(), dom.end());
      for (int x : dom) s += std::to_string(x) + ",";
      s += ":";
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < n; ++x) {
        int y = action.maybe_apply(t, x);
        if (y >= 0)
          pairs.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
      }
      std::sort(pairs.begin(), pairs.end());
      for (const auto& [x, y] : pairs) s += std::to_string(x) + ">" + std::to_string(y) + ",";
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string padded(int n) {
  std::string s = std::to_string(n);
  while (s.size() < 3) s = "0" + s;
  return s;
}

std::vector<GroupSpec> finite_group_pool() {
  return {GroupSpec(0, {2}), GroupSpec(0, {3}), GroupSpec(0, {4}), GroupSpec(0, {2, 2})};
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling keeps the draw uniform and the byte stream portable
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

std::vector<int> random_perm_of_order(std::mt19937_64& rng, int n, std::int64_t order,
                                      const std::vector<std::vector<int>>& must_commute) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> perm = identity_perm(n);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(rand_below(rng, static_cast<std::uint64_t>(i + 1)))]);
    if (!power_is_identity(perm, order)) continue;
    bool ok = true;
    for (const auto& other : must_commute)
      if (!commute(perm, other)) { ok = false; break; }
    if (ok) return perm;
  }
  return identity_perm(n); // always admissible
}

} // namespace

std::vector<CorpusInstance> exhaustive_corpus(const CorpusOptions& options) {
  std::map<std::string, PartialAction> seen; // canonical form -> instance
  for (const GroupSpec& group : finite_group_pool()) {
    for (int n = 1; n <= options.max_superset; ++n) {
      std::vector<std::vector<std::vector<int>>> tuples;
      std::vector<std::vector<int>> current;
      generator_tuples(group, n, 0, current, tuples);
      for (const auto& gens : tuples) {
        PartialAction global =
            global_action(group, default_labels(n), action_from_generators(group, n, gens));
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<int> keep;
          for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) keep.push_back(i);
          PartialAction instance = restrict_action(global, keep);
          seen.emplace(canonical_form(instance), std::move(instance));
        }
      }
    }
  }
  // order by size, ring dimension, then the canonical form itself
  std::vector<std::tuple<int, std::int64_t, std::string>> order;
  for (const auto& [form, action] : seen)
    order.emplace_back(action.size(), action.ring_dim(), form);
  std::sort(order.begin(), order.end());
  std::vector<CorpusInstance> out;
  for (const auto& [size, dim, form] : order)
    out.push_back({"ex-" + padded(static_cast<int>(out.size())), seen.at(form)});
  return out;
}

std::vector<CorpusInstance> random_corpus(int count, std::uint64_t seed,
                                          const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  const std::vector<GroupSpec> pool = finite_group_pool();
  std::vector<CorpusInstance> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<PartialAction> candidate;
    const std::uint64_t kind = rand_below(rng, pool.size() + 1);
    if (kind < pool.size()) {
      const GroupSpec& group = pool[static_cast<std::size_t>(kind)];
      const int n = 1 + static_cast<int>(rand_below(
                            rng, static_cast<std::uint64_t>(options.random_superset)));
      std::vector<std::vector<int>> gens;
      for (std::int64_t order : group.torsion())
        gens.push_back(random_perm_of_order(rng, n, order, gens));
      PartialAction global =
          global_action(group, default_labels(n), action_from_generators(group, n, gens));
      const std::uint64_t mask = 1 + rand_below(rng, (std::uint64_t{1} << n) - 1);
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) keep.push_back(i);
      candidate.push_back(restrict_action(global, keep));
    } else {
      const int n = 2 + static_cast<int>(rand_below(rng, 4)); // windows over {1..n}, n in 2..5
      PartialAction window = make_shift_window(n);
      const std::uint64_t mask = 1 + rand_below(rng, (std::uint64_t{1} << n) - 1);
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) keep.push_back(i);
      candidate.push_back(restrict_action(window, keep));
    }
    if (candidate.front().ring_dim() > options.max_ring_dim) continue;
    out.push_back({"rnd-" + padded(static_cast<int>(out.size())), std::move(candidate.front())});
  }
  return out;
}

} // namespace skewlab
