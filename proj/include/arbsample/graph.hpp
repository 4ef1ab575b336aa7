#pragma once

#include <compare>
#include <string>
#include <vector>

namespace arbsample {

/// Selects the tree family: all directed spanning trees, or only those with
/// exactly one edge leaving the root (dependency trees).
enum class TreeKind { Spanning, Dependency };

const char* to_string(TreeKind kind);

/// Directed tree over nodes 1..N encoded as a parent array: parent[j-1] is
/// the head of node j, with 0 denoting the root.
struct Tree {
  std::vector<int> parent;

  int size() const noexcept { return static_cast<int>(parent.size()); }
  friend auto operator<=>(const Tree&, const Tree&) = default;
};

/// Stable string key for a tree: equal trees map to equal keys and the
/// lexicographic order of keys is a fixed total order across runs.
std::string canonical_key(const Tree& t);

/// Weighted directed graph over N+1 nodes. Node 0 is the root; weights(i, j)
/// is the weight of edge i -> j, zero meaning the edge is absent. Immutable
/// after construction, so instances can be shared across threads.
class Graph {
 public:
  /// weights is (n+1)*(n+1) row-major, row = source, column = target.
  /// Only the shape is checked here; invariants are the job of
  /// validate_graph so that callers can build deliberately invalid graphs
  /// and test the validator.
  Graph(int n, std::vector<double> weights);

  int n() const noexcept { return n_; }
  int node_count() const noexcept { return n_ + 1; }

  double weight(int i, int j) const { return weights_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }

  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  int n_;
  std::vector<double> weights_;
};

/// Checks the graph invariants: non-negative weights, no edges into the
/// root, no self loops, and at least one positive incoming weight per
/// non-root node. Throws Error on the first violation found.
void validate_graph(const Graph& g);

/// Product of edge weights of t under g. Zero if any edge of t has zero
/// weight. Throws on out-of-range parents.
double tree_weight(const Graph& g, const Tree& t);

/// Sum of log edge weights; -inf when tree_weight would be 0. Useful when
/// products of many small weights underflow.
double tree_log_weight(const Graph& g, const Tree& t);

/// True iff t is a valid tree of the requested kind under g: acyclic,
/// every node reaches the root, every edge used has positive weight, and
/// (Dependency) the root has exactly one child.
bool is_tree(const Graph& g, const Tree& t, TreeKind kind);

/// Rescales every non-root column to sum to one. Column ratios, and hence
/// the normalized tree distribution, are unchanged. Idempotent.
Graph normalize_stochastic(const Graph& g);

/// Parses the graph JSON format: {"n": N, "weights": [[...], ...]} with
/// N+1 rows of N+1 numbers. Rejects shape mismatches and invariant
/// violations with typed errors.
Graph graph_from_json(const std::string& text);

/// Serializes a graph to the JSON format accepted by graph_from_json.
std::string graph_to_json(const Graph& g);

}  // namespace arbsample
