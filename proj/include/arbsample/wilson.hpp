#pragma once

#include <cstdint>

#include "arbsample/graph.hpp"
#include "arbsample/random.hpp"

namespace arbsample {

struct WalkStats {
  std::uint64_t steps_taken = 0;  // categorical edge draws
  std::uint64_t rejections = 0;   // full trees discarded (rejection variant)
};

struct WalkSample {
  Tree tree;
  WalkStats stats;
};

inline constexpr std::uint64_t kDefaultRetryCap = 10000;

/// Loop-erased random-walk sampler for directed spanning trees. Returns a
/// tree with probability proportional to its weight. Requires every node to
/// be reachable from the root over positive-weight edges (checked up front,
/// reported as Unreachable), otherwise the walk could not terminate.
WalkSample wilson(const Graph& g, RandomSource& rng);

/// Root-constrained variant: draws the root child j proportional to the raw
/// root edge weight, then samples the rest by a loop-erased walk on the
/// graph re-rooted at j with the original root removed. Always returns a
/// valid dependency tree, but from a biased distribution: the root edge is
/// chosen by weight, not by its marginal. wilson_reject is the unbiased
/// alternative.
WalkSample wilson_rc(const Graph& g, RandomSource& rng);

/// Unbiased dependency-tree sampler: runs wilson until the sample happens to
/// satisfy the single-root-child constraint. stats.rejections counts the
/// discarded trees. Throws RetryCapExceeded after retry_cap rejections,
/// which signals an empty or vanishingly small dependency support.
WalkSample wilson_reject(const Graph& g, RandomSource& rng,
                         std::uint64_t retry_cap = kDefaultRetryCap);

}  // namespace arbsample
