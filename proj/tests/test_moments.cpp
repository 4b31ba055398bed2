#include <gtest/gtest.h>

#include <cmath>

#include "chroma/counting.hpp"
#include "chroma/generators.hpp"
#include "chroma/moments.hpp"
#include "oracles.hpp"

using namespace chroma;

TEST(Moments, MeanFormula) {
  EXPECT_DOUBLE_EQ(mean_T(named_graph("k3"), complete_graph(10), 4), 120.0 / 16.0);
  EXPECT_EQ(mean_T_exact(mpz_class(3), 4, 10), mpq_class(3, 1000));
  EXPECT_DOUBLE_EQ(mean_T(named_graph("c4"), complete_graph(6), 1), 45.0);
  EXPECT_THROW(mean_T(named_graph("k3"), complete_graph(4), 0), std::invalid_argument);
}

TEST(Moments, DecompositionAddsUp) {
  const MomentReport r = variance_T(named_graph("c4"), complete_graph(5), 10);
  EXPECT_EQ(r.copies, 15);
  EXPECT_EQ(r.per_t_overlap.at(4).count, 30);
  EXPECT_NEAR(r.variance, r.r1 + r.r2, 1e-15);
  double sum = 0;
  for (const auto& [t, term] : r.per_t_overlap) sum += term.contribution;
  EXPECT_NEAR(sum, r.r2, 1e-15);
  EXPECT_DOUBLE_EQ(r.mean, 0.015);
}

TEST(Moments, VarianceOfSingleCopyIsBernoulli) {
  const MomentReport r = variance_T(named_graph("k3"), complete_graph(3), 5);
  EXPECT_EQ(r.variance_exact, mpq_class(1, 25) * mpq_class(24, 25));
}

TEST(Moments, AgreeWithColoringEnumeration) {
  for (const char* name : {"k2", "k1_2", "k3", "c4", "p4", "diamond", "tadpole"}) {
    const Graph h = named_graph(name);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Graph g = oracle::random_graph(6, 0.6, 40 + seed);
      const auto list = oracle::copies(h, g);
      for (std::uint64_t c : {1, 2, 3}) {
        const auto [mean, var] = oracle::moments(list, g.vertex_count(), c);
        const MomentReport r = variance_T(h, g, c, 1);
        ASSERT_EQ(r.mean_exact, mean) << name << " seed " << seed << " c=" << c;
        ASSERT_EQ(r.variance_exact, var) << name << " seed " << seed << " c=" << c;
      }
    }
  }
}

TEST(ExactDistribution, MatchesMomentsExactly) {
  const Graph h = named_graph("k3");
  const Graph g = oracle::random_graph(9, 0.6, 8);
  const Pmf pmf = exact_distribution_T(h, g, 3, 1);
  ASSERT_FALSE(pmf.exact.empty());
  mpq_class total = 0;
  mpq_class mean = 0;
  mpq_class second = 0;
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    total += pmf.exact[i];
    mean += pmf.exact[i] * pmf.support[i];
    second += pmf.exact[i] * pmf.support[i] * pmf.support[i];
  }
  const MomentReport r = variance_T(h, g, 3, 1);
  EXPECT_EQ(total, 1);
  EXPECT_EQ(mean, r.mean_exact);
  EXPECT_EQ(second - mean * mean, r.variance_exact);
  EXPECT_EQ(pmf.tail_bound, 0.0);
}

TEST(ExactDistribution, DisjointCopiesAreBinomial) {
  const std::size_t m = 4;
  const std::uint64_t c = 3;
  const Pmf pmf = exact_distribution_T(named_graph("k3"), disjoint_copies(named_graph("k3"), m), c, 1);
  const mpq_class q(1, 9);
  for (std::size_t k = 0; k <= m; ++k) {
    mpz_class choose;
    mpz_bin_uiui(choose.get_mpz_t(), m, k);
    mpq_class expected = choose;
    for (std::size_t i = 0; i < k; ++i) expected *= q;
    for (std::size_t i = k; i < m; ++i) expected *= 1 - q;
    ASSERT_EQ(pmf.support[k], k);
    EXPECT_EQ(pmf.exact[k], expected) << k;
    EXPECT_DOUBLE_EQ(pmf.probability(k), expected.get_d());
  }
}

TEST(ExactDistribution, ThreadsAndGuards) {
  const Graph h = named_graph("c4");
  const Graph g = oracle::random_graph(10, 0.5, 3);
  const Pmf a = exact_distribution_T(h, g, 3, 1);
  const Pmf b = exact_distribution_T(h, g, 3, 4);
  EXPECT_EQ(a.support, b.support);
  EXPECT_EQ(a.exact, b.exact);
  EXPECT_THROW(exact_distribution_T(h, complete_graph(30), 2), GuardError);
  // Above the rational limit the probabilities are still produced, in floating point.
  const Pmf big = exact_distribution_T(named_graph("k3"), complete_graph(13), 3, 1);
  EXPECT_TRUE(big.exact.empty());
  EXPECT_NEAR(big.mean(), mean_T(named_graph("k3"), complete_graph(13), 3), 1e-9);
}
