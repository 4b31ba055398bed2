#include <gtest/gtest.h>

#include <cmath>

#include "chroma/counting.hpp"
#include "chroma/generators.hpp"
#include "chroma/limit_theory.hpp"
#include "chroma/moments.hpp"

using namespace chroma;

namespace {

mpq_class q(long num, long den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

const char* kFixtures[] = {"k2", "k3", "k4", "k1_2", "k1_3", "c4", "c5", "p4",
                           "diamond", "tadpole", "bowtie", "k4-pendant", "wheel5"};

}  // namespace

TEST(Density, Fixtures) {
  EXPECT_EQ(density_exponent(complete_graph(5)), 2);
  EXPECT_EQ(density_exponent(cycle_graph(4)), 1);
  EXPECT_EQ(density_exponent(named_graph("k4-pendant")), q(3, 2));
  EXPECT_TRUE(is_balanced(cycle_graph(4)));
  EXPECT_FALSE(is_balanced(named_graph("k4-pendant")));
  for (std::size_t r = 1; r <= 6; ++r) EXPECT_TRUE(is_balanced(star_graph(r))) << r;
  EXPECT_TRUE(is_balanced(named_graph("tadpole")));
}

TEST(Density, BoundsEdgeRatio) {
  for (const char* name : kFixtures) {
    const Graph h = named_graph(name);
    const mpq_class ratio = q(static_cast<long>(h.edge_count()), static_cast<long>(h.vertex_count()));
    EXPECT_GE(density_exponent(h), ratio) << name;
    EXPECT_EQ(density_exponent(h) == ratio, is_balanced(h)) << name;
  }
}

TEST(Gamma, PendantClique) {
  EXPECT_EQ(gamma_exponent(named_graph("k4-pendant")), q(1, 3));
  EXPECT_EQ(gamma_exponent_exhaustive(named_graph("k4-pendant")), q(1, 3));
  EXPECT_THROW(gamma_exponent(cycle_graph(4)), std::invalid_argument);
}

TEST(Gamma, ScanAgreesWithExhaustiveAndLemmaBounds) {
  std::vector<Graph> graphs;
  for (const char* name : kFixtures) graphs.push_back(named_graph(name));
  graphs.push_back(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  graphs.push_back(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {3, 4}}));
  graphs.push_back(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}));
  graphs.push_back(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}}));
  int unbalanced = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& h = graphs[i];
    if (is_balanced(h)) continue;
    ++unbalanced;
    const mpq_class gamma = gamma_exponent(h);
    EXPECT_EQ(gamma, gamma_exponent_exhaustive(h)) << "fixture " << i;
    EXPECT_GT(gamma, 0) << "fixture " << i;
    EXPECT_LT(gamma, 1 / density_exponent(h)) << "fixture " << i;
  }
  EXPECT_GE(unbalanced, 5);
}

TEST(Colors, RequiredColors) {
  EXPECT_EQ(required_colors(named_graph("k3"), 100, 1.0, 1.0).colors, 402u);
  const ColorChoice k2 = required_colors(named_graph("k2"), 1000, 1.0, 2.0);
  EXPECT_EQ(k2.colors, static_cast<std::uint64_t>(std::llround(499500.0 / 2.0)));
  const ColorChoice big = required_colors(named_graph("k3"), 10000, 1.0, 1.0);
  EXPECT_LE(std::abs(big.realized_lambda - 1.0), 0.02);
  EXPECT_TRUE(required_colors(named_graph("k3"), 5, 0.1, 1.0).clamped);
}

TEST(Mixtures, DenseCherry) {
  const PoissonMixture m = dense_mixture(named_graph("k1_2"), 0.5, 1.0);
  ASSERT_EQ(m.components.size(), 2u);
  EXPECT_EQ(m.components[0].coefficient, 1u);
  EXPECT_NEAR(m.components[0].rate, 0.5, 1e-12);
  EXPECT_EQ(m.components[1].coefficient, 3u);
  EXPECT_NEAR(m.components[1].rate, 1.0 / 6.0, 1e-12);
}

TEST(Mixtures, DenseMeanIsLambda) {
  for (const char* name : {"k1_2", "k3", "c4", "p4", "diamond"}) {
    for (double p : {0.3, 0.5, 0.7}) {
      for (double lambda : {0.5, 1.0, 3.0}) {
        EXPECT_NEAR(dense_mixture(named_graph(name), p, lambda).mean(), lambda, 1e-9) << name << " " << p;
      }
    }
  }
  const PoissonMixture clique = dense_mixture(complete_graph(4), 0.4, 2.0);
  ASSERT_EQ(clique.components.size(), 1u);
  EXPECT_EQ(clique.components[0].coefficient, 1u);
  EXPECT_DOUBLE_EQ(clique.components[0].rate, 2.0);
}

TEST(Mixtures, SequenceMixture) {
  const PoissonMixture tri = sequence_mixture(named_graph("k1_2"), complete_graph(3), 5);
  ASSERT_EQ(tri.components.size(), 1u);
  EXPECT_EQ(tri.components[0].coefficient, 3u);
  EXPECT_DOUBLE_EQ(tri.components[0].rate, 1.0 / 25.0);

  const PoissonMixture cycles = sequence_mixture(cycle_graph(4), disjoint_copies(cycle_graph(4), 1000), 10);
  ASSERT_EQ(cycles.components.size(), 1u);
  EXPECT_DOUBLE_EQ(cycles.components[0].rate, 1.0);

  const Graph g = erdos_renyi(40, 0.3, 4);
  for (const char* name : {"k1_2", "c4", "diamond"}) {
    EXPECT_NEAR(sequence_mixture(named_graph(name), g, 3).mean(), mean_T(named_graph(name), g, 3), 1e-9);
  }
}

TEST(Mixtures, NormalizeMerges) {
  PoissonMixture m{{{3, 0.25}, {1, 0.5}, {3, 0.25}}};
  m.normalize();
  ASSERT_EQ(m.components.size(), 2u);
  EXPECT_EQ(m.components[1].coefficient, 3u);
  EXPECT_DOUBLE_EQ(m.components[1].rate, 0.5);
  EXPECT_DOUBLE_EQ(m.mean(), 2.0);
}

TEST(Regimes, PendantClique) {
  const Graph h = named_graph("k4-pendant");
  const RegimeReport zero = classify_er_regime(h, q(1, 2), 1, 1);
  EXPECT_EQ(zero.regime, Regime::unbalanced_zero);
  EXPECT_EQ(*zero.gamma, q(1, 3));
  EXPECT_EQ(zero.threshold, q(5, 7));
  EXPECT_EQ(classify_er_regime(h, q(1, 5), 1, 1).regime, Regime::sparse_poisson);
  const RegimeReport critical = classify_er_regime(h, q(1, 3), 2, 1);
  EXPECT_EQ(critical.regime, Regime::unbalanced_critical);
  EXPECT_EQ(critical.limit, LimitKind::non_poisson);
  EXPECT_FALSE(critical.predicted_limit.has_value());
  EXPECT_EQ(critical.kappa, 2.0);
}

TEST(Regimes, PiecewiseConstantAroundBreakpoints) {
  const Graph h = named_graph("k4-pendant");
  const mpq_class tiny(1, 1000);
  EXPECT_EQ(classify_er_regime(h, q(1, 3) - tiny, 1, 1).regime, Regime::sparse_poisson);
  EXPECT_EQ(classify_er_regime(h, q(1, 3) + tiny, 1, 1).regime, Regime::unbalanced_zero);
  EXPECT_EQ(classify_er_regime(h, q(5, 7) - tiny, 1, 1).regime, Regime::unbalanced_zero);
  EXPECT_EQ(classify_er_regime(h, q(5, 7), 1, 1).regime, Regime::invalid);
  EXPECT_EQ(classify_er_regime(h, tiny, 1, 1).regime, Regime::sparse_poisson);
  EXPECT_EQ(classify_er_regime(h, 0, 0.5, 1).regime, Regime::dense_mixture);

  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(classify_er_regime(c4, 1 - tiny, 1, 1).regime, Regime::sparse_poisson);
  EXPECT_EQ(classify_er_regime(c4, 1, 1, 1).regime, Regime::invalid);
  const RegimeReport dense = classify_er_regime(c4, 0, 0.5, 1);
  EXPECT_EQ(dense.regime, Regime::dense_mixture);
  EXPECT_NEAR(dense.predicted_limit->mean(), 1.0, 1e-9);
  EXPECT_THROW(classify_er_regime(c4, 0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(classify_er_regime(c4, -tiny, 1.0, 1), std::invalid_argument);
}

TEST(SecondMoment, DisjointTrianglesAreConsistent) {
  const SecondMomentReport r = check_second_moment(complete_graph(3), disjoint_copies(complete_graph(3), 400), 20, 0.05);
  EXPECT_TRUE(r.poisson_consistent);
  EXPECT_DOUBLE_EQ(r.moments.mean, 1.0);
  EXPECT_EQ(r.full_overlap_ratio, 0.0);
  for (const auto& j : r.joins) EXPECT_EQ(j.ratio, 0.0);
}

TEST(SecondMoment, CounterexampleFails) {
  const std::size_t n = 1000;
  const SecondMomentReport r = check_second_moment(cycle_graph(4), counterexample_graph(cycle_graph(4), n, 1.0), 10, 0.05);
  EXPECT_FALSE(r.poisson_consistent);
  EXPECT_GE(r.moments.mean, 2.0 - 0.05);
}

TEST(SecondMoment, WheelJoinsExcludeTheBowtie) {
  // Bowties are 1-joins of triangles; only t >= 2 joins enter the criterion.
  const std::size_t n = 1000;
  const SecondMomentReport r = check_second_moment(complete_graph(3), wheel_graph(n), 10, 0.05);
  EXPECT_EQ(count_copies(named_graph("bowtie"), wheel_graph(n)), n * (n - 3) / 2);
  for (const auto& j : r.joins) {
    EXPECT_EQ(j.t, 2);
    EXPECT_EQ(j.join.representative.vertex_count(), 4u);
  }
  ASSERT_EQ(r.joins.size(), 1u);  // the diamond
  EXPECT_EQ(r.joins[0].copies, n);
}
