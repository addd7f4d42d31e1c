#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morank/pareto.hpp"
#include "morank/problems.hpp"
#include "morank/ranking.hpp"
#include "morank/rng.hpp"

namespace morank {

/// Parental-selection methods. ARF/SRF/FR/KO/RF select from the nondominated
/// front of the current population; SO/RR select from the whole population.
enum class MethodId { ARF, SRF, FR, KO, RF, SO, RR };

inline const char* to_string(MethodId m) {
  switch (m) {
    case MethodId::ARF: return "ARF";
    case MethodId::SRF: return "SRF";
    case MethodId::FR: return "FR";
    case MethodId::KO: return "KO";
    case MethodId::RF: return "RF";
    case MethodId::SO: return "SO";
    case MethodId::RR: return "RR";
  }
  return "?";
}

inline MethodId parse_method(const std::string& s) {
  if (s == "ARF") return MethodId::ARF;
  if (s == "SRF") return MethodId::SRF;
  if (s == "FR") return MethodId::FR;
  if (s == "KO") return MethodId::KO;
  if (s == "RF") return MethodId::RF;
  if (s == "SO") return MethodId::SO;
  if (s == "RR") return MethodId::RR;
  throw std::invalid_argument("unknown method id: " + s);
}

inline const std::vector<MethodId>& all_methods() {
  static const std::vector<MethodId> methods{
      MethodId::ARF, MethodId::SRF, MethodId::FR, MethodId::KO,
      MethodId::RF,  MethodId::SO,  MethodId::RR};
  return methods;
}

struct ArchiveEntry {
  PermutationGenome genome;
  ObjectiveVector value;
};

/// Bounded set of mutually noncovered points with random replacement when
/// full.
class Archive {
 public:
  explicit Archive(std::size_t capacity) : capacity_(capacity) {
    if (capacity < 1) throw std::invalid_argument("archive capacity must be >= 1");
  }

  /// Rejects points covered by an existing entry; otherwise removes all
  /// entries the new point dominates, evicts one uniformly random entry if
  /// still at capacity, and inserts. Returns whether the point entered.
  bool insert(PermutationGenome genome, ObjectiveVector value, Rng& rng) {
    for (const auto& e : entries_) {
      if (covers(e.value, value)) return false;
    }
    std::erase_if(entries_,
                  [&](const ArchiveEntry& e) { return dominates(value, e.value); });
    if (entries_.size() >= capacity_) {
      const std::size_t victim = rng.below(entries_.size());
      entries_.erase(entries_.begin() + victim);
    }
    entries_.push_back({std::move(genome), std::move(value)});
    return true;
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::vector<ArchiveEntry>& entries() const { return entries_; }

  std::vector<ObjectiveVector> values() const {
    std::vector<ObjectiveVector> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) v.push_back(e.value);
    return v;
  }

 private:
  std::size_t capacity_;
  std::vector<ArchiveEntry> entries_;
};

/// Swaps a uniformly random adjacent pair of positions.
inline PermutationGenome adjacent_swap_mutate(PermutationGenome g, Rng& rng) {
  if (g.size() < 2) throw std::invalid_argument("genome too short to mutate");
  const std::size_t i = rng.below(g.size() - 1);
  std::swap(g[i], g[i + 1]);
  return g;
}

/// Tournament over ranks: sample `size` candidates uniformly with
/// replacement, return the lowest-ranked; ties break uniformly at random
/// among the tied sampled candidates. `ranks[i]` belongs to `candidates[i]`.
inline std::size_t tournament_select(const std::vector<int>& ranks,
                                     const std::vector<std::size_t>& candidates,
                                     int size, Rng& rng) {
  if (candidates.empty()) throw std::invalid_argument("no tournament candidates");
  if (ranks.size() != candidates.size()) {
    throw std::invalid_argument("ranks and candidates differ in length");
  }
  int best_rank = 0;
  std::vector<std::size_t> tied;  // candidate positions, deduplicated
  for (int t = 0; t < size; ++t) {
    const std::size_t pos = rng.below(candidates.size());
    if (tied.empty() || ranks[pos] < best_rank) {
      best_rank = ranks[pos];
      tied.assign(1, pos);
    } else if (ranks[pos] == best_rank) {
      bool seen = false;
      for (std::size_t q : tied) seen = seen || q == pos;
      if (!seen) tied.push_back(pos);
    }
  }
  return candidates[tied[rng.below(tied.size())]];
}

/// Ranks a population for parental selection. Returns ranks aligned with the
/// returned candidate indices (positions into the population).
struct SelectionRanks {
  std::vector<int> ranks;
  std::vector<std::size_t> candidates;
};

inline SelectionRanks rank_population(const std::vector<ObjectiveVector>& values,
                                      MethodId method) {
  if (values.empty()) throw std::invalid_argument("empty population");
  SelectionRanks out;
  const bool front_only = method != MethodId::SO && method != MethodId::RR;
  if (front_only) {
    out.candidates = nondominated_indices(values);
  } else {
    out.candidates.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.candidates[i] = i;
  }
  std::vector<ObjectiveVector> pool;
  pool.reserve(out.candidates.size());
  for (std::size_t i : out.candidates) pool.push_back(values[i]);
  switch (method) {
    case MethodId::ARF:
      out.ranks = average_rank(Population(std::move(pool))).ranks;
      break;
    case MethodId::SRF:
    case MethodId::SO:
      out.ranks = sum_of_ratios(Population(std::move(pool))).ranks;
      break;
    case MethodId::FR:
      out.ranks = favour_rank(Population(std::move(pool))).ranks;
      break;
    case MethodId::KO:
      out.ranks = k_optimality_rank(Population(std::move(pool))).ranks;
      break;
    case MethodId::RF:
    case MethodId::RR:
      out.ranks.assign(out.candidates.size(), 1);
      break;
  }
  return out;
}

struct MoeaConfig {
  int popsize = 20;
  int generations = 500;
  int tournament_size = 5;
  std::size_t archive_capacity = 100;
  MethodId method = MethodId::ARF;
  std::uint64_t seed = 0;

  void validate() const {
    if (popsize < 1 || generations < 0 || tournament_size < 1 ||
        archive_capacity < 1) {
      throw std::invalid_argument("MOEA parameters must be positive");
    }
    if (tournament_size > popsize) {
      throw std::invalid_argument("tournament size exceeds popsize");
    }
  }
};

/// The generational loop: rank the population per the selection method, seed
/// the next generation with a random archive member, then fill it with
/// tournament-selected, adjacent-swap-mutated offspring, archiving each
/// evaluation. Deterministic given cfg.seed.
inline Archive run_moea(const ProblemInstance& problem, const MoeaConfig& cfg) {
  cfg.validate();
  const int n = genome_length(problem);
  if (n < 2) throw std::invalid_argument("problem genome too short");

  Rng rng(cfg.seed);
  Archive archive(cfg.archive_capacity);

  struct Member {
    PermutationGenome genome;
    ObjectiveVector value;
  };
  std::vector<Member> population;
  population.reserve(cfg.popsize);
  for (int i = 0; i < cfg.popsize; ++i) {
    PermutationGenome g = random_permutation(n, rng);
    ObjectiveVector v = evaluate(problem, g);
    archive.insert(g, v, rng);
    population.push_back({std::move(g), std::move(v)});
  }

  std::vector<ObjectiveVector> values(population.size());
  for (int gen = 0; gen < cfg.generations; ++gen) {
    for (std::size_t i = 0; i < population.size(); ++i) {
      values[i] = population[i].value;
    }
    const SelectionRanks sel = rank_population(values, cfg.method);

    std::vector<Member> next;
    next.reserve(cfg.popsize);
    const ArchiveEntry& elite =
        archive.entries()[rng.below(archive.size())];
    next.push_back({elite.genome, elite.value});
    for (int i = 0; i < cfg.popsize - 1; ++i) {
      const std::size_t parent = tournament_select(
          sel.ranks, sel.candidates, cfg.tournament_size, rng);
      PermutationGenome m =
          adjacent_swap_mutate(population[parent].genome, rng);
      ObjectiveVector v = evaluate(problem, m);
      archive.insert(m, v, rng);
      next.push_back({std::move(m), std::move(v)});
    }
    population = std::move(next);
  }
  return archive;
}

}  // namespace morank
