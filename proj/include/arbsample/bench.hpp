#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arbsample/graph.hpp"
#include "arbsample/random.hpp"

namespace arbsample {

enum class WeightDistribution { Uniform, Exponential, SoftmaxGumbel };

WeightDistribution weight_distribution_from_string(const std::string& name);

/// Complete graph on n non-root nodes with random edge weights:
///   Uniform       i.i.d. in (0, 1]
///   Exponential   i.i.d. Exp(1), heavy-ish tail
///   SoftmaxGumbel per-column softmax of Gumbel(0,1) draws (skewed, sums 1)
Graph random_complete_graph(int n, RandomSource& rng, WeightDistribution dist);

struct BenchRow {
  int n = 0;
  std::string algorithm;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;
};

struct BenchConfig {
  std::vector<int> sizes;
  int graphs_per_size = 20;
  int samples_per_graph = 20;
  WeightDistribution dist = WeightDistribution::Uniform;
  std::uint64_t seed = 1;
  std::vector<std::string> algorithms = {"wilson-rc", "colbourn"};
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// log-log best-fit slope per algorithm; present when >= 2 sizes ran.
  std::map<std::string, double> slopes;
};

/// Times per-sample wall-clock cost of each algorithm on random complete
/// graphs. Graph generation and I/O are excluded from the timed region;
/// three warmup samples per size are discarded.
BenchResult run_bench(const BenchConfig& cfg);

}  // namespace arbsample
