#include "arbsample/graph.hpp"

#include <cmath>
#include <stdexcept>

#include "arbsample/error.hpp"

namespace arbsample {

const char* to_string(TreeKind kind) {
  return kind == TreeKind::Spanning ? "spanning" : "dependency";
}

std::string canonical_key(const Tree& t) {
  std::string key;
  key.reserve(t.parent.size() * 3);
  for (std::size_t i = 0; i < t.parent.size(); ++i) {
    if (i) key.push_back(',');
    key += std::to_string(t.parent[i]);
  }
  return key;
}

Graph::Graph(int n, std::vector<double> weights) : n_(n), weights_(std::move(weights)) {
  if (n_ < 1) throw std::invalid_argument("Graph: n must be >= 1");
  const auto expected = static_cast<std::size_t>(n_ + 1) * (n_ + 1);
  if (weights_.size() != expected)
    throw std::invalid_argument("Graph: weights must be (n+1)x(n+1)");
}

void validate_graph(const Graph& g) {
  const int m = g.node_count();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double w = g.weight(i, j);
      if (w < 0.0 || !std::isfinite(w))
        throw Error(errc::negative_weight,
                    "NegativeWeight(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (j == 0 && w != 0.0)
        throw Error(errc::edge_into_root, "EdgeIntoRoot(" + std::to_string(i) + ")");
      if (i == j && w != 0.0)
        throw Error(errc::self_loop, "SelfLoop(" + std::to_string(i) + ")");
    }
  }
  for (int j = 1; j < m; ++j) {
    bool any = false;
    for (int i = 0; i < m; ++i) {
      if (g.weight(i, j) > 0.0) {
        any = true;
        break;
      }
    }
    if (!any) throw Error(errc::isolated_node, "IsolatedNode(" + std::to_string(j) + ")");
  }
}

namespace {

void check_parents(const Graph& g, const Tree& t) {
  if (t.size() != g.n())
    throw Error(errc::parent_out_of_range, "ParentOutOfRange(size)");
  for (int j = 1; j <= g.n(); ++j) {
    const int p = t.parent[j - 1];
    if (p < 0 || p > g.n() || p == j)
      throw Error(errc::parent_out_of_range,
                  "ParentOutOfRange(" + std::to_string(j) + ")");
  }
}

}  // namespace

double tree_weight(const Graph& g, const Tree& t) {
  check_parents(g, t);
  double w = 1.0;
  for (int j = 1; j <= g.n(); ++j) w *= g.weight(t.parent[j - 1], j);
  return w;
}

double tree_log_weight(const Graph& g, const Tree& t) {
  check_parents(g, t);
  double lw = 0.0;
  for (int j = 1; j <= g.n(); ++j) {
    const double w = g.weight(t.parent[j - 1], j);
    if (w <= 0.0) return -std::numeric_limits<double>::infinity();
    lw += std::log(w);
  }
  return lw;
}

bool is_tree(const Graph& g, const Tree& t, TreeKind kind) {
  const int n = g.n();
  if (t.size() != n) return false;
  int root_children = 0;
  for (int j = 1; j <= n; ++j) {
    const int p = t.parent[j - 1];
    if (p < 0 || p > n || p == j) return false;
    if (g.weight(p, j) <= 0.0) return false;
    if (p == 0) ++root_children;
  }
  if (root_children == 0) return false;
  if (kind == TreeKind::Dependency && root_children != 1) return false;
  // Every node must reach the root without revisiting (acyclicity).
  for (int start = 1; start <= n; ++start) {
    int u = start;
    int hops = 0;
    while (u != 0) {
      u = t.parent[u - 1];
      if (++hops > n) return false;  // cycle
    }
  }
  return true;
}

Graph normalize_stochastic(const Graph& g) {
  validate_graph(g);
  const int m = g.node_count();
  std::vector<double> w = g.weights();
  for (int j = 1; j < m; ++j) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += g.weight(i, j);
    if (sum <= 0.0)
      throw Error(errc::isolated_node, "IsolatedNode(" + std::to_string(j) + ")");
    for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i) * m + j] /= sum;
  }
  return Graph(g.n(), std::move(w));
}

}  // namespace arbsample
