#ifndef SKEWLAB_GUARDS_HPP
#define SKEWLAB_GUARDS_HPP

#include <cstdint>

namespace skewlab {

// Resource bounds for the exhaustive procedures.  Every guard violation is
// reported as an Error naming the bound that tripped, never as silence or a
// wrong answer.
struct Guards {
  std::int64_t max_dim = 32;               // canonical basis size for ring-level work
  std::int64_t max_subspaces = std::int64_t{1} << 16; // 1-dim subspace reps scanned by the oracle
  int bfs_depth = 6;                        // product-closure levels in the witness search
  std::int64_t max_unit_enum = std::int64_t{1} << 20; // nonzero elements tried by the field check
  int max_set = 16;                         // |X| for subset enumerations (2^|X| work)
};

} // namespace skewlab

#endif
