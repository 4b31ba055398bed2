#include <gtest/gtest.h>

#include <cmath>

#include "chroma/counting.hpp"
#include "chroma/generators.hpp"
#include "chroma/limit_theory.hpp"
#include "chroma/moments.hpp"
#include "chroma/simulation.hpp"

using namespace chroma;

namespace {

// TV between an empirical histogram and an exact pmf without a tail.
double tv_to_exact(const EmpiricalDistribution& emp, const Pmf& pmf) {
  EXPECT_EQ(pmf.tail_bound, 0.0);
  return tv_distance(emp, pmf);
}

}  // namespace

TEST(Random, StreamsAreReproducibleAndDistinct) {
  Stream a(5, 3);
  Stream b(5, 3);
  Stream c(5, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Stream s(1, 0);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[s.below(7)];
  for (int k : counts) EXPECT_NEAR(k, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Coloring, RangeAndEvaluation) {
  Stream s(9, 0);
  const Coloring col = sample_coloring(50, 4, s);
  ASSERT_EQ(col.colors.size(), 50u);
  for (auto v : col.colors) {
    EXPECT_GE(v, 1u);
    EXPECT_LE(v, 4u);
  }
  const CopyList copies(3, {0, 1, 2, 1, 2, 3});
  Coloring fixed{{1, 2, 2, 2}, 2};
  EXPECT_EQ(evaluate_T(copies, fixed), 1u);
  fixed.colors = {2, 2, 2, 2};
  EXPECT_EQ(evaluate_T(copies, fixed), 2u);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const Graph h = named_graph("c4");
  const Graph g = erdos_renyi(60, 0.3, 1);
  const auto one = monte_carlo(h, g, 6, 3000, 77, 1);
  const auto four = monte_carlo(h, g, 6, 3000, 77, 4);
  EXPECT_EQ(one.histogram, four.histogram);
  EXPECT_EQ(one.sample_mean, four.sample_mean);
  EXPECT_NE(one.histogram, monte_carlo(h, g, 6, 3000, 78, 1).histogram);
}

TEST(MonteCarlo, HeavyRootsMatchListedCopies) {
  // Pyramid hosts have a few roots carrying almost every copy, which exercises
  // the per-replicate recount path alongside the listed one.
  const Graph h = cycle_graph(4);
  const Graph g = counterexample_graph(h, 400, 1.0);
  const CopyList all = enumerate_copies(h, g);
  const auto emp = monte_carlo(h, g, 5, 400, 3, 2);
  std::map<std::uint64_t, std::uint64_t> direct;
  for (std::uint64_t r = 0; r < 400; ++r) {
    Stream s(3, r);
    ++direct[evaluate_T(all, sample_coloring(g, 5, s))];
  }
  EXPECT_EQ(emp.histogram, direct);
}

TEST(MonteCarlo, AgreesWithExactLaw) {
  const Graph h = named_graph("k3");
  const Graph g = erdos_renyi(10, 0.6, 2);
  const Pmf exact = exact_distribution_T(h, g, 3, 1);
  const auto emp = monte_carlo(h, g, 3, 100000, 11, 0);
  EXPECT_LE(tv_to_exact(emp, exact), 0.02);
  EXPECT_NEAR(emp.sample_mean, exact.mean(), 0.05);
}

TEST(MonteCarlo, DisjointCopiesFollowBinomial) {
  const std::size_t m = 50;
  const std::uint64_t c = 4;
  const auto emp = monte_carlo(complete_graph(3), disjoint_copies(complete_graph(3), m), c, 100000, 5, 0);
  Pmf binom;
  const double q = 1.0 / 16.0;
  for (std::size_t k = 0; k <= m; ++k) {
    binom.support.push_back(k);
    binom.probabilities.push_back(std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) +
                                           k * std::log(q) + (m - k) * std::log1p(-q)));
  }
  EXPECT_LE(tv_distance(emp, binom), 0.02);
}

TEST(MonteCarloEr, CompleteHostReducesToFixedHost) {
  const Graph h = named_graph("k3");
  const std::uint64_t n = 30;
  const auto er = monte_carlo_er(h, n, 0, 1.0, 1.0, 2000, 21, 1);
  const std::uint64_t c = required_colors(h, n, 1.0, 1.0).colors;
  EXPECT_EQ(er.colors, c);
  EXPECT_EQ(er.edge_probability, 1.0);
  const auto fixed = monte_carlo(h, complete_graph(n), c, 2000, 21, 1);
  EXPECT_EQ(er.histogram, fixed.histogram);
}

TEST(MonteCarloEr, DeterministicAndValidated) {
  const Graph h = named_graph("k3");
  const auto a = monte_carlo_er(h, 200, mpq_class(1, 4), 1.0, 1.0, 500, 8, 1);
  const auto b = monte_carlo_er(h, 200, mpq_class(1, 4), 1.0, 1.0, 500, 8, 3);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_NEAR(a.edge_probability, std::pow(200.0, -0.25), 1e-12);
  EXPECT_THROW(monte_carlo_er(h, 200, 0, 2.0, 1.0, 10, 1, 1), std::invalid_argument);
}

TEST(Mixture, SinglePoissonComponent) {
  const Pmf pmf = mixture_pmf(PoissonMixture{{{1, 1.7}}}, 40);
  const Pmf direct = poisson_pmf(1.7, 40);
  EXPECT_NEAR(pmf.probability(0), std::exp(-1.7), 1e-15);
  for (std::uint64_t k = 0; k <= 40; ++k) EXPECT_NEAR(pmf.probability(k), direct.probability(k), 1e-12) << k;
}

TEST(Mixture, HandConvolution) {
  const Pmf pmf = mixture_pmf(PoissonMixture{{{1, 0.5}, {3, 1.0 / 6.0}}}, 60);
  EXPECT_NEAR(pmf.probability(2), 0.125 * std::exp(-0.5) * std::exp(-1.0 / 6.0), 1e-15);
  EXPECT_NEAR(pmf.probability(3), (std::pow(0.5, 3) / 6 + 1.0 / 6.0) * std::exp(-0.5 - 1.0 / 6.0), 1e-15);
  EXPECT_NEAR(pmf.mean() + pmf.tail_bound, 1.0, 1e-9);
}

TEST(Mixture, MeanMatchesLinearity) {
  const PoissonMixture m{{{1, 0.4}, {2, 0.3}, {5, 0.1}}};
  const Pmf pmf = mixture_pmf(m, 200);
  EXPECT_NEAR(pmf.mean(), m.mean(), 1e-9);
  EXPECT_LT(pmf.tail_bound, 1e-9);
  const Pmf cut = mixture_pmf(m, 3);
  EXPECT_NEAR(cut.tail_bound, 1.0 - (cut.probability(0) + cut.probability(1) + cut.probability(2) + cut.probability(3)), 1e-15);
}

TEST(TotalVariation, EdgeCases) {
  EmpiricalDistribution emp;
  emp.histogram = {{0, 30}, {1, 70}};
  emp.replicates = 100;
  Pmf same;
  same.support = {0, 1};
  same.probabilities = {0.3, 0.7};
  EXPECT_NEAR(tv_distance(emp, same), 0.0, 1e-15);
  Pmf apart;
  apart.support = {5, 6};
  apart.probabilities = {0.5, 0.5};
  EXPECT_NEAR(tv_distance(emp, apart), 1.0, 1e-15);
  same.tail_bound = 0.01;
  EXPECT_NEAR(tv_distance(emp, same), 0.01, 1e-15);
}

TEST(TotalVariation, SelfConsistency) {
  const Pmf pois = poisson_pmf(1.0, 30);
  EmpiricalDistribution emp;
  emp.replicates = 100000;
  for (std::uint64_t r = 0; r < emp.replicates; ++r) {
    Stream s(4, r);
    double u = s.uniform();
    std::uint64_t k = 0;
    while (k < 30 && u >= pois.probabilities[k]) u -= pois.probabilities[k++];
    ++emp.histogram[k];
  }
  finalize_moments(emp);
  EXPECT_LE(tv_distance(emp, pois), 0.02);
  EXPECT_NEAR(emp.sample_mean, 1.0, 0.02);
  EXPECT_NEAR(emp.sample_variance, 1.0, 0.03);
}
