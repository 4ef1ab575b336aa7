#pragma once

#include <span>

#include "arbsample/graph.hpp"
#include "arbsample/linalg.hpp"
#include "arbsample/random.hpp"

namespace arbsample {

/// Laplacian L of a graph together with B = L^{-T} and Z = det(L),
/// maintained incrementally while edges are conditioned on. One sampler
/// invocation owns one state; independent invocations never share it.
struct LaplacianState {
  TreeKind kind = TreeKind::Dependency;
  Matrix l;  // N x N
  Matrix b;  // L^{-T}; zero matrix when singular (z == 0)
  double z = 0.0;
  int updates_since_refresh = 0;

  bool singular() const;
};

/// Builds the Laplacian whose determinant is the partition value Z of the
/// requested tree family: for dependency trees the row of node 1 carries the
/// root edge weights; for spanning trees the root weights are folded into
/// the diagonal. A singular result (Z = 0: no tree exists) is reported via
/// state.z = 0 with b left zero, not as an exception.
LaplacianState build_laplacian(const Graph& g, TreeKind kind);

/// Writes into `out` (size N+1, indexed by head) the conditional marginal
/// probability of each edge i -> j given everything previously conditioned
/// into `state`. Entries sum to one; roundoff negatives within 1e-9 are
/// clamped to zero, anything lower is an error. Throws DegenerateColumn when
/// the column has no mass left.
void edge_marginals_into(const LaplacianState& state, const Graph& g, int j,
                         std::span<double> out);

std::vector<double> edge_marginals(const LaplacianState& state, const Graph& g, int j);

/// Restricts the state to trees containing edge i -> j: replaces column j of
/// L, updates B by a rank-one inverse update and Z by the determinant
/// lemma. Every N updates, or when the update denominator is tiny, B and Z
/// are recomputed from scratch to bound floating-point drift.
void condition(LaplacianState& state, const Graph& g, int i, int j);

/// Ancestral sampler: draws the head of each node 1..N in turn from the
/// conditional edge marginals, conditioning after each draw. Returns a tree
/// distributed exactly as w(t)/Z over the requested kind. O(N^3) time.
/// Throws Singular when no tree of the kind exists.
Tree colbourn(const Graph& g, TreeKind kind, RandomSource& rng);

}  // namespace arbsample
