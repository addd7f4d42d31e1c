#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "morank/pareto.hpp"
#include "morank/rng.hpp"

namespace morank {

/// Tour order (TSP) or processing order (JSP).
using PermutationGenome = std::vector<int>;

inline bool is_permutation_of_n(const PermutationGenome& g) {
  std::vector<bool> seen(g.size(), false);
  for (int v : g) {
    if (v < 0 || v >= static_cast<int>(g.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline PermutationGenome random_permutation(int n, Rng& rng) {
  PermutationGenome g(n);
  std::iota(g.begin(), g.end(), 0);
  // Fisher-Yates with our own draws, for cross-platform reproducibility.
  for (int i = n - 1; i > 0; --i) {
    std::swap(g[i], g[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return g;
}

/// k-objective symmetric TSP: one distance matrix per objective, chained by
/// the correlation recurrence d_{i+1} = pc * d_i + (1 - pc) * rand().
struct TspInstance {
  int n_cities = 0;
  int k = 0;
  double tsp_pc = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> matrices;  // k matrices, each n*n row-major

  double distance(int objective, int a, int b) const {
    return matrices[objective][static_cast<std::size_t>(a) * n_cities + b];
  }
};

inline TspInstance generate_tsp(int n_cities, int k, double tsp_pc,
                                std::uint64_t seed) {
  if (n_cities < 3) throw std::invalid_argument("TSP needs at least 3 cities");
  if (k < 1) throw std::invalid_argument("TSP needs at least 1 objective");
  if (!(tsp_pc > -1.0 && tsp_pc < 1.0)) {
    throw std::invalid_argument("tsp_pc must lie in (-1, 1)");
  }
  TspInstance inst;
  inst.n_cities = n_cities;
  inst.k = k;
  inst.tsp_pc = tsp_pc;
  inst.seed = seed;
  inst.matrices.assign(k, std::vector<double>(
                              static_cast<std::size_t>(n_cities) * n_cities,
                              0.0));
  Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(n_cities);
  for (int o = 0; o < k; ++o) {
    auto& m = inst.matrices[o];
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        double d;
        if (o == 0) {
          d = rng.uniform01();
        } else {
          d = tsp_pc * inst.matrices[o - 1][a * n + b] +
              (1.0 - tsp_pc) * rng.uniform01();
        }
        m[a * n + b] = d;
        m[b * n + a] = d;
      }
    }
  }
  return inst;
}

inline ObjectiveVector evaluate_tsp(const TspInstance& inst,
                                    const PermutationGenome& g) {
  if (static_cast<int>(g.size()) != inst.n_cities || !is_permutation_of_n(g)) {
    throw std::invalid_argument("genome is not a permutation of the cities");
  }
  ObjectiveVector v(inst.k, 0.0);
  const int n = inst.n_cities;
  for (int o = 0; o < inst.k; ++o) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      total += inst.distance(o, g[i], g[(i + 1) % n]);  // closed tour
    }
    v[o] = total;
  }
  return v;
}

/// k-customer single-machine job-shop: each job has an integer processing
/// time in [50,200], a due date in [50, 150*jsp_pc], and a customer in
/// [1,k]. Objective i is the summed tardiness of customer i's jobs.
struct JspInstance {
  int n_jobs = 0;
  int k = 0;
  double jsp_pc = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> proc_time;
  std::vector<double> due_date;
  std::vector<int> customer;  // 1-based customer ids
};

inline JspInstance generate_jsp(int n_jobs, int k, double jsp_pc,
                                std::uint64_t seed) {
  if (k < 1 || n_jobs < k) {
    throw std::invalid_argument("JSP needs n_jobs >= k >= 1");
  }
  if (!(jsp_pc > 0.0)) throw std::invalid_argument("jsp_pc must be positive");
  JspInstance inst;
  inst.n_jobs = n_jobs;
  inst.k = k;
  inst.jsp_pc = jsp_pc;
  inst.seed = seed;
  inst.proc_time.resize(n_jobs);
  inst.due_date.resize(n_jobs);
  inst.customer.resize(n_jobs);
  Rng rng(seed);
  for (int j = 0; j < n_jobs; ++j) {
    inst.proc_time[j] = static_cast<int>(rng.uniform_int(50, 200));
    inst.due_date[j] = 50.0 + (150.0 * jsp_pc - 50.0) * rng.uniform01();
    inst.customer[j] = static_cast<int>(rng.below(k)) + 1;
  }
  return inst;
}

inline ObjectiveVector evaluate_jsp(const JspInstance& inst,
                                    const PermutationGenome& g) {
  if (static_cast<int>(g.size()) != inst.n_jobs || !is_permutation_of_n(g)) {
    throw std::invalid_argument("genome is not a permutation of the jobs");
  }
  ObjectiveVector v(inst.k, 0.0);
  double completion = 0.0;
  for (int job : g) {
    completion += inst.proc_time[job];
    const double lateness = std::max(0.0, completion - inst.due_date[job]);
    v[inst.customer[job] - 1] += lateness;
  }
  return v;
}

using ProblemInstance = std::variant<TspInstance, JspInstance>;

inline int genome_length(const ProblemInstance& p) {
  return std::visit(
      [](const auto& inst) {
        if constexpr (std::is_same_v<std::decay_t<decltype(inst)>,
                                     TspInstance>) {
          return inst.n_cities;
        } else {
          return inst.n_jobs;
        }
      },
      p);
}

inline int objective_count(const ProblemInstance& p) {
  return std::visit([](const auto& inst) { return inst.k; }, p);
}

inline ObjectiveVector evaluate(const ProblemInstance& p,
                                const PermutationGenome& g) {
  return std::visit(
      [&](const auto& inst) {
        if constexpr (std::is_same_v<std::decay_t<decltype(inst)>,
                                     TspInstance>) {
          return evaluate_tsp(inst, g);
        } else {
          return evaluate_jsp(inst, g);
        }
      },
      p);
}

}  // namespace morank
