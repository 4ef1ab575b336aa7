#pragma once

#include <map>
#include <string>
#include <vector>

#include "arbsample/graph.hpp"
#include "arbsample/linalg.hpp"

namespace arbsample {

/// Hard cap on brute-force enumeration (N^N candidate parent vectors).
inline constexpr int kDefaultEnumCap = 8;

struct TreeInfo {
  Tree tree;
  double weight = 0.0;
  double probability = 0.0;
};

/// Exact distribution over every positive-weight tree of a graph, computed
/// by exhaustive enumeration. Ground truth for all statistical tests.
struct ExactDistribution {
  TreeKind kind = TreeKind::Spanning;
  double z = 0.0;
  std::map<std::string, TreeInfo> entries;  // canonical_key -> info

  const TreeInfo* find(const Tree& t) const;
};

/// All valid positive-weight trees of the requested kind, each exactly
/// once, ordered by canonical_key. Throws TooLarge above the cap.
std::vector<Tree> enumerate_trees(const Graph& g, TreeKind kind, int cap = kDefaultEnumCap);

/// Exact p(t) = w(t)/Z over the enumerated support. Throws EmptySupport
/// when no tree has positive weight.
ExactDistribution exact_distribution(const Graph& g, TreeKind kind, int cap = kDefaultEnumCap);

/// (N+1)x(N+1) matrix with entry (i, j) = sum of p(t) over trees containing
/// edge i -> j. Every non-root column sums to one.
Matrix exact_marginals(const Graph& g, TreeKind kind, int cap = kDefaultEnumCap);

/// Exact distribution restricted to the trees not yet drawn, renormalized
/// by Z_D = Z - sum of drawn weights. Dependency trees by default, matching
/// the sampler it validates. Throws SupportExhausted when nothing remains.
ExactDistribution exact_swor_conditional(const Graph& g, const std::vector<Tree>& drawn,
                                         TreeKind kind = TreeKind::Dependency,
                                         int cap = kDefaultEnumCap);

}  // namespace arbsample
