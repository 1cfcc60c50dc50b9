#ifndef SKEWLAB_GROUP_HPP
#define SKEWLAB_GROUP_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

// Element of a finitely generated abelian group, stored as one coordinate per
// factor (free coordinates first, then torsion coordinates).  Ordering is
// lexicographic on coordinates; it is the canonical order used for map keys
// and JSON emission throughout.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t arity() const { return coords_.size(); }

  auto operator<=>(const GroupElement&) const = default;

  // Comma-joined coordinates, e.g. "2,1"; the identity of the trivial group
  // is the empty string.
  std::string key() const;

private:
  std::vector<std::int64_t> coords_;
};

// Z^free_rank x Z_{n_1} x ... x Z_{n_k}.  Torsion coordinates are kept
// reduced to [0, n_i); free coordinates are plain integers.
class GroupSpec {
public:
  GroupSpec(int free_rank, std::vector<std::int64_t> torsion);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t arity() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }

  bool finite() const { return free_rank_ == 0; }
  std::int64_t order() const; // throws InfiniteGroup if free rank > 0

  GroupElement zero() const;
  bool is_zero(const GroupElement& a) const;

  // Builds an element from raw coordinates, reducing torsion entries.
  GroupElement element(std::vector<std::int64_t> coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  // All elements in canonical (lexicographic) order; throws InfiniteGroup
  // when the free rank is positive.
  std::vector<GroupElement> enumerate() const;

  GroupElement parse_key(const std::string& key) const;

  std::string describe() const; // "Z", "Z_2 x Z_2", "Z x Z_3", "0"

  bool operator==(const GroupSpec&) const = default;

private:
  void check_arity(const GroupElement& a) const;

  int free_rank_;
  std::vector<std::int64_t> torsion_;
};

} // namespace skewlab

#endif
