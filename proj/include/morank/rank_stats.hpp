#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "morank/pareto.hpp"
#include "morank/problems.hpp"
#include "morank/ranking.hpp"
#include "morank/rng.hpp"

namespace morank {

/// Histogram of rank -> number of points holding that rank.
struct RankDistribution {
  std::map<int, int> counts;
  int n = 0;
};

inline RankDistribution rank_distribution(const std::vector<int>& ranks) {
  RankDistribution d;
  d.n = static_cast<int>(ranks.size());
  for (int r : ranks) ++d.counts[r];
  return d;
}

/// Normalized entropy of a rank distribution: 0 when every point shares one
/// rank, 1 when all ranks are distinct. A singleton is vacuously totally
/// ordered and returns 1.
inline double relative_entropy(const RankDistribution& d) {
  if (d.n < 1) throw std::invalid_argument("empty rank distribution");
  if (d.n == 1) return 1.0;
  double numerator = 0.0;
  for (const auto& [rank, count] : d.counts) {
    const double p = static_cast<double>(count) / d.n;
    numerator += p * std::log(p);
  }
  const double re = numerator / std::log(1.0 / d.n);
  return std::min(1.0, std::max(0.0, re));
}

/// Entropy histogram over sampled populations: a dedicated bar for exact
/// zero, then 20 half-open bins (0,0.05], (0.05,0.1], ..., (0.95,1.0].
struct EntropyHistogram {
  static constexpr int kBins = 20;
  long zero_count = 0;
  std::array<long, kBins> bins{};
  int k = 0;
  std::string method;

  void add(double re) {
    if (re == 0.0) {
      ++zero_count;
    } else {
      int idx = static_cast<int>(std::ceil(re / 0.05)) - 1;
      if (idx < 0) idx = 0;
      if (idx >= kBins) idx = kBins - 1;
      ++bins[idx];
    }
  }

  long total() const {
    long t = zero_count;
    for (long b : bins) t += b;
    return t;
  }
};

struct EntropyStudyOptions {
  int cities = 30;
  double tsp_pc = 0.0;
};

/// Rank-distribution study: repeatedly generate a fresh random TSP instance
/// and population, rank the nondominated subset with `method`, and bin the
/// relative entropy. Per-repetition seeds derive from `seed`, so repetitions
/// are order-independent.
inline EntropyHistogram entropy_study(int k, int n_pops, int pop_size,
                                      std::uint64_t seed, RankingMethod method,
                                      EntropyStudyOptions opts = {}) {
  if (pop_size < 2) throw std::invalid_argument("pop_size must be >= 2");
  EntropyHistogram hist;
  hist.k = k;
  switch (method) {
    case RankingMethod::AverageRank: hist.method = "ar"; break;
    case RankingMethod::SumOfRatios: hist.method = "sr"; break;
    case RankingMethod::Favour: hist.method = "favour"; break;
    case RankingMethod::KOptimality: hist.method = "ko"; break;
    case RankingMethod::WinningScore: hist.method = "ws"; break;
  }
  for (int rep = 0; rep < n_pops; ++rep) {
    const std::uint64_t rep_seed =
        derive_seed(seed, {static_cast<std::uint64_t>(rep)});
    const TspInstance inst =
        generate_tsp(opts.cities, k, opts.tsp_pc, derive_seed(rep_seed, {0}));
    Rng rng(derive_seed(rep_seed, {1}));
    std::vector<ObjectiveVector> values;
    values.reserve(pop_size);
    for (int i = 0; i < pop_size; ++i) {
      values.push_back(evaluate_tsp(inst, random_permutation(opts.cities, rng)));
    }
    const Population front = nondominated_set(Population(std::move(values)));
    const RankAssignment ranks = rank_points(front, method);
    hist.add(relative_entropy(rank_distribution(ranks.ranks)));
  }
  return hist;
}

}  // namespace morank
