#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "arbsample/enumerate.hpp"
#include "arbsample/graph.hpp"
#include "arbsample/random.hpp"

namespace arbsample {

struct EmpiricalDistribution {
  std::map<std::string, std::uint64_t> counts;  // canonical_key -> observed
  std::uint64_t total = 0;

  void add(const Tree& t);
};

struct GofReport {
  double statistic = 0.0;
  int dof = 1;
  double p_value = 1.0;
  double tv_distance = 0.0;
  bool reject = false;
};

/// Tallies n_samples draws from the sampler by canonical key.
EmpiricalDistribution collect(const std::function<Tree(RandomSource&)>& sampler,
                              std::uint64_t n_samples, RandomSource& rng);

/// Pearson goodness-of-fit of an empirical sample against the exact
/// distribution. Cells with expected count below 5 are merged (smallest
/// first, deterministic). Also reports the total-variation distance. A tree
/// outside the exact support is a hard failure: throws ForeignTree.
GofReport chi_square_gof(const EmpiricalDistribution& emp, const ExactDistribution& exact,
                         double alpha);

/// Two-sample Pearson homogeneity test over the union support of two
/// empirical distributions (same merging rule as chi_square_gof).
GofReport chi_square_homogeneity(const EmpiricalDistribution& a,
                                 const EmpiricalDistribution& b, double alpha);

/// Two-sided p-value for H0: success rate = p0. Exact summation for
/// total <= 1000, normal approximation beyond.
double binomial_two_sided(std::uint64_t successes, std::uint64_t total, double p0);

/// Survival function of the chi-square distribution with dof degrees of
/// freedom, via the regularized upper incomplete gamma function.
double chi_square_sf(double x, int dof);

}  // namespace arbsample
