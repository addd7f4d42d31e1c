#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "morank/rank_stats.hpp"
#include "morank/rng.hpp"

using namespace morank;

namespace {

RankDistribution make_dist(std::map<int, int> counts) {
  RankDistribution d;
  d.counts = std::move(counts);
  for (const auto& [r, c] : d.counts) d.n += c;
  return d;
}

}  // namespace

TEST_CASE("relative entropy endpoints") {
  std::vector<int> same(50, 1);
  CHECK(relative_entropy(rank_distribution(same)) == 0.0);

  std::vector<int> distinct(50);
  for (int i = 0; i < 50; ++i) distinct[i] = i + 1;
  CHECK(relative_entropy(rank_distribution(distinct)) ==
        doctest::Approx(1.0));
}

TEST_CASE("relative entropy of a lopsided distribution") {
  // 100 points: one at rank 1, 99 at rank 2.
  const double re = relative_entropy(make_dist({{1, 1}, {2, 99}}));
  const double expected =
      (0.01 * std::log(0.01) + 0.99 * std::log(0.99)) / std::log(0.01);
  CHECK(re == doctest::Approx(expected));
  CHECK(re == doctest::Approx(0.0122).epsilon(0.01));
}

TEST_CASE("singleton convention") {
  CHECK(relative_entropy(make_dist({{1, 1}})) == 1.0);
}

TEST_CASE("relative entropy stays within [0,1]") {
  Rng rng(3);
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng.below(60));
    std::vector<int> ranks(n);
    for (auto& r : ranks) r = 1 + static_cast<int>(rng.below(n));
    const double re = relative_entropy(rank_distribution(ranks));
    CHECK(re >= 0.0);
    CHECK(re <= 1.0);
  }
}

TEST_CASE("merging two ranks never increases relative entropy") {
  Rng rng(17);
  for (int it = 0; it < 500; ++it) {
    const int m = 2 + static_cast<int>(rng.below(6));
    std::map<int, int> counts;
    for (int r = 1; r <= m; ++r) {
      counts[r] = 1 + static_cast<int>(rng.below(10));
    }
    const double before = relative_entropy(make_dist(counts));
    const int a = 1 + static_cast<int>(rng.below(m - 1));
    counts[a] += counts[a + 1];
    counts.erase(a + 1);
    const double after = relative_entropy(make_dist(counts));
    CHECK(after <= before + 1e-12);
  }
}

TEST_CASE("histogram binning") {
  EntropyHistogram h;
  h.add(0.0);
  h.add(1e-9);
  h.add(0.05);
  h.add(0.051);
  h.add(1.0);
  CHECK(h.zero_count == 1);
  CHECK(h.bins[0] == 2);
  CHECK(h.bins[1] == 1);
  CHECK(h.bins[19] == 1);
  CHECK(h.total() == 5);
}

TEST_CASE("entropy study conserves counts and is deterministic") {
  const auto h1 = entropy_study(5, 40, 20, 123, RankingMethod::Favour);
  const auto h2 = entropy_study(5, 40, 20, 123, RankingMethod::Favour);
  CHECK(h1.total() == 40);
  CHECK(h1.zero_count == h2.zero_count);
  CHECK(h1.bins == h2.bins);
}

TEST_CASE("identical clones put all mass at zero") {
  // Any ranking method gives clones one shared rank.
  std::vector<int> ranks(30, 1);
  EntropyHistogram h;
  for (int i = 0; i < 10; ++i) {
    h.add(relative_entropy(rank_distribution(ranks)));
  }
  CHECK(h.zero_count == 10);
}
