#ifndef SKEWLAB_CORPUS_HPP
#define SKEWLAB_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewlab/partial_action.hpp"

namespace skewlab {

struct CorpusInstance {
  std::string id;
  PartialAction action;
};

struct CorpusOptions {
  int max_superset = 3;             // |Y| bound for the exhaustive sweep
  int random_superset = 4;          // |Y| bound for random finite-group instances
  std::int64_t max_ring_dim = 16;   // random instances above this are resampled
};

// Every restriction of every global action of Z_2, Z_3, Z_4 and Z_2 x Z_2 on
// supersets of size up to max_superset, deduplicated up to relabeling of the
// points, sorted canonically and labeled ex-000, ex-001, ...  Restrictions
// of global actions are exactly the partial actions this construction can
// reach, so the sweep is exhaustive for its size class.
std::vector<CorpusInstance> exhaustive_corpus(const CorpusOptions& options = {});

// Seeded random instances (labeled rnd-000, ...): restrictions of random
// finite-group actions and of integer shift windows.  Reproducible: the same
// seed and options give byte-identical instances.
std::vector<CorpusInstance> random_corpus(int count, std::uint64_t seed,
                                          const CorpusOptions& options = {});

} // namespace skewlab

#endif
