#pragma once

#include <set>
#include <vector>

#include "arbsample/colbourn.hpp"
#include "arbsample/graph.hpp"
#include "arbsample/random.hpp"

namespace arbsample {

struct DrawnTree {
  Tree tree;
  double weight = 0.0;  // cached at draw time, never recomputed
};

/// State for sampling trees without replacement. Each draw works on a
/// pristine copy of the Laplacian state; previously drawn trees are
/// progressively filtered out of `active_d` as edges are conditioned on.
struct SworState {
  LaplacianState lap;       // per-draw working copy
  std::vector<DrawnTree> drawn;
  double z_total = 0.0;     // Z of the unconditioned graph
  double z_d = 0.0;         // z of current conditioning minus active drawn mass
  std::vector<int> active_d;  // indices into drawn, consistent with conditioning so far

  LaplacianState pristine;  // unconditioned L, B, Z kept for per-draw reset
  std::set<std::string> drawn_keys;
};

struct SworItem {
  Tree tree;
  /// weight(t) / Z_D at the start of the draw: the probability of t given
  /// everything drawn before it.
  double conditional_probability = 0.0;
};

struct SworResult {
  std::vector<SworItem> items;
  bool exhausted = false;  // support ran out before k draws
};

/// Builds the initial state. signalled singular (z = 0) the same way as
/// build_laplacian: via z_total = 0.
SworState swor_init(const Graph& g, TreeKind kind);

/// Resets the working Laplacian to the pristine copy and re-activates every
/// drawn tree; z_d is recomputed from the cached exact weights.
void swor_begin_draw(SworState& state);

/// Conditional marginals of heads of node j given the conditioning so far
/// AND excluding all drawn trees still consistent with it:
///   m[i] = [ z * p(i -> j | conditioning) - mass of active drawn trees with
///            head of j = i ] / z_d.
/// Entries sum to one. Throws SupportExhausted when no mass remains.
std::vector<double> swor_edge_marginals(const SworState& state, const Graph& g, int j);

/// Conditions the working Laplacian on edge i -> j, filters active_d down to
/// the drawn trees whose head of j is i, and refreshes z_d.
void swor_condition(SworState& state, const Graph& g, int i, int j);

/// Registers a completed draw: caches its weight and marks its key.
void swor_finish_draw(SworState& state, const Graph& g, const Tree& t);

/// Draws up to k distinct trees, the n-th from the exact distribution
/// restricted to trees not previously drawn. When the support holds fewer
/// than k trees, returns them all with exhausted = true instead of failing.
/// Throws Singular when the graph has no tree of the requested kind at all.
SworResult swor(const Graph& g, TreeKind kind, int k, RandomSource& rng);

}  // namespace arbsample
