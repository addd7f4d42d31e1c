#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "morank/compare.hpp"
#include "morank/io.hpp"
#include "morank/moea.hpp"
#include "morank/problems.hpp"
#include "morank/rng.hpp"

namespace morank {

/// One experimental cell: a problem family at fixed k and correlation.
struct CellSpec {
  std::string family;  // "tsp" or "jsp"
  int k = 0;
  double pc = 0.0;
  int n = 30;  // cities or jobs
};

struct MoeaParams {
  int popsize = 20;
  int generations = 500;
  int tournament_size = 5;
  std::size_t archive_capacity = 100;
};

inline std::uint64_t cell_seed(std::uint64_t base, const CellSpec& spec) {
  const std::uint64_t family_tag = spec.family == "tsp" ? 1 : 2;
  return derive_seed(base, {family_tag, static_cast<std::uint64_t>(spec.k),
                            std::bit_cast<std::uint64_t>(spec.pc),
                            static_cast<std::uint64_t>(spec.n)});
}

inline ProblemInstance make_instance(const CellSpec& spec, std::uint64_t seed) {
  if (spec.family == "tsp") {
    return generate_tsp(spec.n, spec.k, spec.pc, seed);
  }
  if (spec.family == "jsp") {
    return generate_jsp(spec.n, spec.k, spec.pc, seed);
  }
  throw std::invalid_argument("unknown problem family: " + spec.family);
}

struct CellResult {
  CellSpec spec;
  std::vector<MethodId> methods;
  // archives[trial][method]: final archive's objective vectors
  std::vector<std::vector<std::vector<ObjectiveVector>>> archives;
  std::vector<std::pair<int, int>> pairs;        // indices into methods
  std::vector<std::vector<CoverResult>> covs;    // covs[pair][trial]
  std::vector<PairwiseSummary> summaries;        // one per pair
};

/// Paired design: trial t of every method shares one instance; each
/// (trial, method) run owns a derived seed, so any subset of the grid and
/// any worker count reproduce identical results.
inline CellResult run_cell(const CellSpec& spec,
                           const std::vector<MethodId>& methods, int trials,
                           const MoeaParams& params, std::uint64_t base_seed,
                           int win_threshold = 17, int threads = 1) {
  CellResult result;
  result.spec = spec;
  result.methods = methods;
  result.archives.assign(trials,
                         std::vector<std::vector<ObjectiveVector>>(methods.size()));

  const std::uint64_t cseed = cell_seed(base_seed, spec);
  std::vector<ProblemInstance> instances;
  instances.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    instances.push_back(make_instance(
        spec, derive_seed(cseed, {static_cast<std::uint64_t>(t), 0})));
  }

  const int jobs = trials * static_cast<int>(methods.size());
  std::atomic<int> next_job{0};
  auto worker = [&] {
    for (;;) {
      const int job = next_job.fetch_add(1);
      if (job >= jobs) return;
      const int t = job / static_cast<int>(methods.size());
      const int m = job % static_cast<int>(methods.size());
      MoeaConfig cfg;
      cfg.popsize = params.popsize;
      cfg.generations = params.generations;
      cfg.tournament_size = params.tournament_size;
      cfg.archive_capacity = params.archive_capacity;
      cfg.method = methods[m];
      cfg.seed = derive_seed(
          cseed, {static_cast<std::uint64_t>(t), 1,
                  static_cast<std::uint64_t>(cfg.method)});
      result.archives[t][m] = run_moea(instances[t], cfg).values();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int a = 0; a < static_cast<int>(methods.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(methods.size()); ++b) {
      result.pairs.emplace_back(a, b);
      std::vector<CoverResult> pair_covs(trials);
      for (int t = 0; t < trials; ++t) {
        pair_covs[t].cov_ab = cover(result.archives[t][a], result.archives[t][b]);
        pair_covs[t].cov_ba = cover(result.archives[t][b], result.archives[t][a]);
      }
      result.summaries.push_back(pairwise_verdict(pair_covs, win_threshold,
                                                  to_string(methods[a]),
                                                  to_string(methods[b])));
      result.covs.push_back(std::move(pair_covs));
    }
  }
  return result;
}

inline std::string covs_csv_header() {
  return "family,k,pc,trial,method_a,method_b,cov_ab,cov_ba\n";
}

inline void append_covs_csv(std::string& out, const CellResult& cell) {
  for (std::size_t p = 0; p < cell.pairs.size(); ++p) {
    const auto [a, b] = cell.pairs[p];
    for (std::size_t t = 0; t < cell.covs[p].size(); ++t) {
      out += cell.spec.family;
      out += ",";
      out += std::to_string(cell.spec.k);
      out += ",";
      out += format_double(cell.spec.pc);
      out += ",";
      out += std::to_string(t);
      out += ",";
      out += to_string(cell.methods[a]);
      out += ",";
      out += to_string(cell.methods[b]);
      out += ",";
      out += format_double(cell.covs[p][t].cov_ab);
      out += ",";
      out += format_double(cell.covs[p][t].cov_ba);
      out += "\n";
    }
  }
}

struct Table1Row {
  int k = 0;
  std::string pair;   // "ARF vs RR"
  std::string cells;  // one verdict char per pc value, in grid order
};

/// Table-1-style summary: per (k, method pair), the verdict characters
/// across the pc values in the order the cells are supplied.
inline std::vector<Table1Row> table1_rows(const std::vector<CellResult>& cells) {
  std::map<std::pair<int, std::string>, std::string> acc;
  std::vector<std::pair<int, std::string>> order;
  for (const auto& cell : cells) {
    for (const auto& s : cell.summaries) {
      const auto key =
          std::make_pair(cell.spec.k, s.method_a + " vs " + s.method_b);
      if (!acc.contains(key)) order.push_back(key);
      acc[key] += verdict_char(s.verdict);
    }
  }
  std::vector<Table1Row> rows;
  for (const auto& key : order) {
    rows.push_back({key.first, key.second, acc[key]});
  }
  return rows;
}

struct Table2Row {
  int k = 0;
  double pc = 0.0;
  std::string ordering;
};

inline std::vector<Table2Row> table2_rows(const std::vector<CellResult>& cells) {
  std::vector<Table2Row> rows;
  for (const auto& cell : cells) {
    rows.push_back({cell.spec.k, cell.spec.pc,
                    ordering_to_string(rank_ordering(cell.summaries))});
  }
  return rows;
}

}  // namespace morank
