#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "morank/pareto.hpp"

namespace morank {

/// Cov(A,B): fraction of B's points covered by at least one point of A.
inline double cover(const std::vector<ObjectiveVector>& a,
                    const std::vector<ObjectiveVector>& b) {
  if (b.empty()) throw std::invalid_argument("cover: set B is empty");
  std::size_t covered = 0;
  for (const auto& pb : b) {
    for (const auto& pa : a) {
      if (covers(pa, pb)) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(b.size());
}

struct CoverResult {
  double cov_ab = 0.0;
  double cov_ba = 0.0;
};

enum class Verdict { ASig, BSig, NoSig };

inline const char* verdict_char(Verdict v) {
  switch (v) {
    case Verdict::ASig: return "A";
    case Verdict::BSig: return "B";
    case Verdict::NoSig: return "0";
  }
  return "?";
}

struct PairwiseSummary {
  std::string method_a;
  std::string method_b;
  int wins_a = 0;
  int wins_b = 0;
  int ties = 0;
  Verdict verdict = Verdict::NoSig;
};

/// Counts strict cover wins over paired trials; a side is significant when
/// it reaches `threshold` wins (default 17 of 20). Equal cover values count
/// toward neither side.
inline PairwiseSummary pairwise_verdict(const std::vector<CoverResult>& trials,
                                        int threshold, std::string method_a,
                                        std::string method_b) {
  if (trials.empty()) throw std::invalid_argument("no trials");
  if (threshold > static_cast<int>(trials.size())) {
    throw std::invalid_argument("threshold exceeds trial count");
  }
  PairwiseSummary s;
  s.method_a = std::move(method_a);
  s.method_b = std::move(method_b);
  for (const CoverResult& t : trials) {
    if (t.cov_ab > t.cov_ba) ++s.wins_a;
    else if (t.cov_ba > t.cov_ab) ++s.wins_b;
    else ++s.ties;
  }
  if (s.wins_a >= threshold) s.verdict = Verdict::ASig;
  else if (s.wins_b >= threshold) s.verdict = Verdict::BSig;
  return s;
}

/// Exact fair-coin sign test for `wins` or more successes out of n.
struct SignTestResult {
  double one_sided = 1.0;  // P[X >= wins], X ~ Binomial(n, 1/2)
  double two_sided = 1.0;  // doubled one-sided tail, capped at 1

  double bonferroni(int comparisons) const {
    return std::min(1.0, one_sided * comparisons);
  }
};

inline SignTestResult sign_test_pvalue(int n, int wins) {
  if (n < 1 || n > 64 || wins < 0 || wins > n) {
    throw std::invalid_argument("sign test supports 1 <= n <= 64, 0 <= wins <= n");
  }
  // Pascal row in exact integers; C(64,32) fits in 64 bits.
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  }
  unsigned __int128 tail = 0;
  for (int i = wins; i <= n; ++i) tail += row[i];
  const long double denom = std::pow(2.0L, n);
  SignTestResult r;
  r.one_sided = static_cast<double>(static_cast<long double>(tail) / denom);
  r.two_sided = std::min(1.0, 2.0 * r.one_sided);
  return r;
}

/// Ordered partition of methods: left-to-right layers such that no method
/// sits left of one that significantly beat it. Layers come from the
/// longest-path depth in the significant-win digraph; names sort
/// alphabetically within a layer. A cycle of significant wins is flagged as
/// inconsistent, with the unplaced methods grouped into a trailing layer.
struct MethodOrdering {
  std::vector<std::vector<std::string>> layers;
  bool consistent = true;
};

inline MethodOrdering rank_ordering(const std::vector<PairwiseSummary>& summaries) {
  std::set<std::string> name_set;
  for (const auto& s : summaries) {
    name_set.insert(s.method_a);
    name_set.insert(s.method_b);
  }
  std::vector<std::string> names(name_set.begin(), name_set.end());
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<int>(i);

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> adj(n);  // winner -> loser
  std::vector<int> indegree(n, 0);
  for (const auto& s : summaries) {
    if (s.verdict == Verdict::ASig) {
      adj[id[s.method_a]].push_back(id[s.method_b]);
      ++indegree[id[s.method_b]];
    } else if (s.verdict == Verdict::BSig) {
      adj[id[s.method_b]].push_back(id[s.method_a]);
      ++indegree[id[s.method_a]];
    }
  }

  // Kahn with longest-path depths.
  std::vector<int> depth(n, 1), order;
  std::vector<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (int v : adj[u]) {
      depth[v] = std::max(depth[v], depth[u] + 1);
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }

  MethodOrdering out;
  const int placed = static_cast<int>(order.size());
  int max_depth = 0;
  for (int u : order) max_depth = std::max(max_depth, depth[u]);
  out.layers.assign(max_depth + (placed < n ? 1 : 0), {});
  for (int u : order) out.layers[depth[u] - 1].push_back(names[u]);
  if (placed < n) {
    out.consistent = false;
    for (int i = 0; i < n; ++i) {
      if (indegree[i] > 0) out.layers.back().push_back(names[i]);
    }
  }
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  std::erase_if(out.layers, [](const auto& l) { return l.empty(); });
  return out;
}

inline std::string ordering_to_string(const MethodOrdering& o) {
  std::string s;
  for (std::size_t i = 0; i < o.layers.size(); ++i) {
    if (i) s += ", ";
    for (std::size_t j = 0; j < o.layers[i].size(); ++j) {
      if (j) s += "=";
      s += o.layers[i][j];
    }
  }
  if (!o.consistent) s += " [inconsistent]";
  return s;
}

}  // namespace morank
