#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "morank/pareto.hpp"

namespace morank {

/// Per-point ranks (lower = preferred) plus the raw scores they were derived
/// from. Methods without a natural score (favour, k-optimality) report the
/// rank itself as the score.
struct RankAssignment {
  std::vector<int> ranks;
  std::vector<double> scores;
  std::string method;
};

/// Pairwise per-objective comparison signs: +1 when point i beats point j on
/// objective o, 0 on a tie, -1 otherwise.
class ComparisonMatrix {
 public:
  explicit ComparisonMatrix(const Population& p)
      : n_(p.size()), k_(p.objectives()), data_(n_ * n_ * k_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t o = 0; o < k_; ++o) {
          std::int8_t s = 0;
          if (p[i][o] < p[j][o]) s = 1;
          else if (p[i][o] > p[j][o]) s = -1;
          data_[(i * n_ + j) * k_ + o] = s;
          data_[(j * n_ + i) * k_ + o] = static_cast<std::int8_t>(-s);
        }
      }
    }
  }

  int entry(std::size_t i, std::size_t j, std::size_t o) const {
    return data_[(i * n_ + j) * k_ + o];
  }
  std::size_t size() const { return n_; }
  std::size_t objectives() const { return k_; }

 private:
  std::size_t n_, k_;
  std::vector<std::int8_t> data_;
};

/// Dense ranking of scores: equal scores share a rank, distinct ranks form
/// {1..m}.
inline std::vector<int> dense_ranks(const std::vector<double>& scores) {
  std::vector<double> distinct(scores);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<int> ranks(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), scores[i]);
    ranks[i] = static_cast<int>(it - distinct.begin()) + 1;
  }
  return ranks;
}

/// Average Ranking: score = sum over objectives of the point's competition
/// rank on that objective (1 + number of points strictly better).
inline RankAssignment average_rank(const Population& p) {
  const std::size_t n = p.size();
  const std::size_t k = p.objectives();
  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t o = 0; o < k; ++o) {
      int better = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (p[j][o] < p[i][o]) ++better;
      }
      scores[i] += 1 + better;
    }
  }
  return {dense_ranks(scores), std::move(scores), "ar"};
}

/// Sum of Ratios: score = sum over objectives of the min-max normalized
/// value within the point set. An objective with zero range contributes 0
/// for every point.
inline RankAssignment sum_of_ratios(const Population& p) {
  const std::size_t n = p.size();
  const std::size_t k = p.objectives();
  std::vector<double> scores(n, 0.0);
  for (std::size_t o = 0; o < k; ++o) {
    double lo = p[0][o], hi = p[0][o];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, p[i][o]);
      hi = std::max(hi, p[i][o]);
    }
    if (hi > lo) {
      for (std::size_t i = 0; i < n; ++i) {
        scores[i] += (p[i][o] - lo) / (hi - lo);
      }
    }
  }
  return {dense_ranks(scores), std::move(scores), "sr"};
}

enum class FavourOutcome { AFavoured, BFavoured, Neither };

/// a is favoured over b when a beats b on strictly more objectives than b
/// beats a. Not transitive.
inline FavourOutcome favour(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_same_dim(a, b);
  int a_wins = 0, b_wins = 0;
  for (std::size_t o = 0; o < a.size(); ++o) {
    if (a[o] < b[o]) ++a_wins;
    else if (a[o] > b[o]) ++b_wins;
  }
  if (a_wins > b_wins) return FavourOutcome::AFavoured;
  if (b_wins > a_wins) return FavourOutcome::BFavoured;
  return FavourOutcome::Neither;
}

namespace detail {

/// Iterative Tarjan SCC over an adjacency-list digraph. Returns component
/// ids in reverse topological order (an edge u->v implies scc[u] >= scc[v]
/// never holds; Tarjan emits sinks first).
inline std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj, int& component_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), lowlink(n, 0), scc(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  component_count = 0;
  int next_index = 0;

  struct Frame {
    int node;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.node].size()) {
        int w = adj[f.node][f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[w]);
        }
      } else {
        if (lowlink[f.node] == index[f.node]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc[w] = component_count;
          } while (w != f.node);
          ++component_count;
        }
        int v = f.node;
        frames.pop_back();
        if (!frames.empty()) {
          lowlink[frames.back().node] =
              std::min(lowlink[frames.back().node], lowlink[v]);
        }
      }
    }
  }
  return scc;
}

}  // namespace detail

/// Favour-relation ranking: build the favour digraph, collapse cycles into
/// SCCs, then layer the condensation by longest path from the sources. All
/// points of one SCC share a rank; distinct ranks form {1..m}.
inline RankAssignment favour_rank(const Population& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (favour(p[i], p[j])) {
        case FavourOutcome::AFavoured: adj[i].push_back(j); break;
        case FavourOutcome::BFavoured: adj[j].push_back(i); break;
        case FavourOutcome::Neither: break;
      }
    }
  }
  int n_comp = 0;
  std::vector<int> scc = detail::strongly_connected_components(adj, n_comp);

  // Condensation edges; Tarjan ids are reverse-topological, so iterating
  // components from high id to low visits predecessors first.
  std::vector<std::vector<int>> cadj(n_comp);
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (scc[u] != scc[v]) cadj[scc[u]].push_back(scc[v]);
    }
  }
  std::vector<int> depth(n_comp, 1);
  for (int c = n_comp - 1; c >= 0; --c) {
    for (int d : cadj[c]) {
      depth[d] = std::max(depth[d], depth[c] + 1);
    }
  }
  RankAssignment out;
  out.method = "favour";
  out.ranks.resize(n);
  out.scores.resize(n);
  for (int i = 0; i < n; ++i) {
    out.ranks[i] = depth[scc[i]];
    out.scores[i] = out.ranks[i];
  }
  return out;
}

/// k-optimality: a point's rank is the smallest z such that it is
/// nondominated under every z-element objective subset. Computed per pair:
/// an opponent beating the point on b objectives and tying on t admits a
/// dominating subset of any size up to b+t (when b >= 1), so the rank is
/// 1 + max over opponents of (b+t). Input must be mutually nondominated.
inline RankAssignment k_optimality_rank(const Population& p) {
  const std::size_t n = p.size();
  const std::size_t k = p.objectives();
  if (k > 20) {
    throw std::invalid_argument("k-optimality supports at most 20 objectives");
  }
  RankAssignment out;
  out.method = "ko";
  out.ranks.resize(n);
  out.scores.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      int beats = 0, ties = 0;
      for (std::size_t o = 0; o < k; ++o) {
        if (p[j][o] < p[i][o]) ++beats;
        else if (p[j][o] == p[i][o]) ++ties;
      }
      if (beats >= 1) {
        if (beats + ties == static_cast<int>(k)) {
          throw std::invalid_argument(
              "k-optimality requires mutually nondominated input");
        }
        rank = std::max(rank, beats + ties + 1);
      }
    }
    out.ranks[i] = rank;
    out.scores[i] = rank;
  }
  return out;
}

/// Winning score: negated sum over all opponents of the per-objective
/// win/loss margins. Ordering-equivalent to average_rank on tie-free data.
inline RankAssignment winning_score(const Population& p) {
  const ComparisonMatrix a(p);
  const std::size_t n = a.size();
  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t o = 0; o < a.objectives(); ++o) {
        scores[i] -= a.entry(i, j, o);
      }
    }
  }
  return {dense_ranks(scores), std::move(scores), "ws"};
}

enum class RankingMethod {
  AverageRank,
  SumOfRatios,
  Favour,
  KOptimality,
  WinningScore,
};

inline RankAssignment rank_points(const Population& p, RankingMethod m) {
  switch (m) {
    case RankingMethod::AverageRank: return average_rank(p);
    case RankingMethod::SumOfRatios: return sum_of_ratios(p);
    case RankingMethod::Favour: return favour_rank(p);
    case RankingMethod::KOptimality: return k_optimality_rank(p);
    case RankingMethod::WinningScore: return winning_score(p);
  }
  throw std::logic_error("unknown ranking method");
}

}  // namespace morank
