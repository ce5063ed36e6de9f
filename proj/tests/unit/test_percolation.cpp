#include <gtest/gtest.h>

#include <cmath>

#include "qnet/error.hpp"
#include "qnet/generators.hpp"
#include "qnet/percolation.hpp"
#include "test_support.hpp"

using namespace qnet;
using namespace qnet::testing;

TEST(LinkState, ConversionProbabilityIsP) {
  for (double p : {0.0, 0.1, 0.3, 0.5, 0.77, 1.0}) {
    EXPECT_EQ(singlet_conversion_probability(LinkState(p)), p);
  }
}

TEST(LinkState, NormAndSchmidtWeights) {
  for (int k = 0; k <= 20; ++k) {
    const LinkState link(0.05 * k);
    const Eigen::Vector4d a = link.amplitudes();
    EXPECT_NEAR(a.squaredNorm(), 1.0, 1e-12);
    EXPECT_EQ(a(1), 0.0);
    EXPECT_EQ(a(2), 0.0);
    const auto [big, small] = link.schmidt_coefficients();
    EXPECT_GE(big, small);
    EXPECT_NEAR(big + small, 1.0, 1e-15);
    EXPECT_NEAR(small, link.p() / 2.0, 1e-15);
  }
  EXPECT_THROW(LinkState(-0.1), ValidationError);
  EXPECT_THROW(LinkState(1.1), ValidationError);
}

TEST(QubitState, ProbabilitiesSumToOne) {
  const QubitState q{0.4, 1.3};
  EXPECT_NEAR(q.probability_zero() + q.probability_one(), 1.0, 1e-15);
  EXPECT_NEAR(std::arg(q.amplitudes()(1)), -1.3, 1e-15);
}

TEST(QuantumRandomGraph, Extremes) {
  EXPECT_EQ(sample_quantum_random_graph(10, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(sample_quantum_random_graph(10, 1.0, 1).edge_count(), 45u);
}

TEST(QuantumRandomGraph, EdgeCountIsBinomial) {
  const double pairs = 64.0 * 63.0 / 2.0;
  const double mean_expected = pairs * 0.1;
  const double sd = std::sqrt(pairs * 0.1 * 0.9);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    total += static_cast<double>(sample_quantum_random_graph(64, 0.1, seed).edge_count());
  const double mean = total / 500.0;
  EXPECT_NEAR(mean_expected, 201.6, 1e-12);
  // Three standard errors of the mean.
  EXPECT_NEAR(mean, mean_expected, 3.0 * sd / std::sqrt(500.0));
}

TEST(UnionFind, MergesAndSizes) {
  UnionFind uf(6);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(2, 1));
  EXPECT_FALSE(uf.unite(0, 2));
  EXPECT_EQ(uf.size_of(2), 3u);
  EXPECT_EQ(uf.size_of(5), 1u);
  EXPECT_EQ(uf.find(0), uf.find(2));
  EXPECT_NE(uf.find(0), uf.find(3));
}

TEST(Subgraph, AutomorphismCounts) {
  EXPECT_EQ(automorphism_count(SubgraphPattern::edge()), 2u);
  EXPECT_EQ(automorphism_count(SubgraphPattern::path3()), 2u);
  EXPECT_EQ(automorphism_count(SubgraphPattern::triangle()), 6u);
  EXPECT_EQ(automorphism_count(SubgraphPattern::square()), 8u);
  EXPECT_EQ(automorphism_count(SubgraphPattern::complete4()), 24u);
}

TEST(Subgraph, ContainmentExamples) {
  EXPECT_TRUE(contains_subgraph(generators::complete(4), SubgraphPattern::complete4()));
  EXPECT_FALSE(contains_subgraph(generators::cycle(5), SubgraphPattern::triangle()));
  EXPECT_TRUE(contains_subgraph(generators::cycle(3), SubgraphPattern::triangle()));
  EXPECT_TRUE(contains_subgraph(generators::torus(4, 4), SubgraphPattern::square()));
  EXPECT_FALSE(contains_subgraph(generators::star(6), SubgraphPattern::square()));
  EXPECT_TRUE(contains_subgraph(generators::star(6), SubgraphPattern::path3()));
  EXPECT_FALSE(contains_subgraph(Graph(4), SubgraphPattern::edge()));
}

TEST(Subgraph, ContainmentMatchesBruteForceOnRandomGraphs) {
  // Brute force: a triangle exists iff some triple is pairwise adjacent.
  for (int trial = 0; trial < 40; ++trial) {
    auto rng = rng_for(100, trial);
    const Index n = random_size(rng, 3, 12);
    const Graph g = generators::erdos_renyi(n, 0.25, rng);
    const RealMatrix w = g.weight_matrix();
    bool found = false;
    for (Index a = 0; a < n && !found; ++a)
      for (Index b = a + 1; b < n && !found; ++b)
        for (Index c = b + 1; c < n && !found; ++c)
          found = w(a, b) > 0 && w(b, c) > 0 && w(a, c) > 0;
    EXPECT_EQ(contains_subgraph(g, SubgraphPattern::triangle()), found) << trial;
  }
}

TEST(Subgraph, PatternCapIsEnforced) {
  const SubgraphPattern big{generators::path(6)};
  EXPECT_THROW(contains_subgraph(generators::complete(8), big), ValidationError);
  EXPECT_THROW(subgraph_emergence({16}, {1.0}, 1.0, big, 1, 0), ValidationError);
}

TEST(Emergence, ExpectedEdgeCountBelowThreshold) {
  const double c = 3.0;
  for (Index n : {10, 100, 1000}) {
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(expected_subgraph_count(n, c / (nn * nn), SubgraphPattern::edge()),
                c / 2.0 * (1.0 - 1.0 / nn), 1e-12);
  }
  // p = c / N^2 sits on the edge scaling n / l = 2: the count stays O(1).
  const EmergenceCurve curve = subgraph_emergence({32}, {3.0}, 2.0, SubgraphPattern::edge(), 4, 0);
  EXPECT_EQ(curve.regime, EmergenceRegime::Critical);
  EXPECT_DOUBLE_EQ(curve.critical_z, 2.0);
  EXPECT_NEAR(curve.points[0].expected_count, 1.5 * (1.0 - 1.0 / 32.0), 1e-12);
  EXPECT_EQ(subgraph_emergence({32}, {3.0}, 2.5, SubgraphPattern::edge(), 4, 0).regime,
            EmergenceRegime::Below);
  EXPECT_EQ(subgraph_emergence({32}, {3.0}, 1.5, SubgraphPattern::edge(), 4, 0).regime,
            EmergenceRegime::Above);
}

TEST(Emergence, TriangleSharpensAtCriticalScaling) {
  const EmergenceCurve curve =
      subgraph_emergence({64}, {0.2, 6.0}, 1.0, SubgraphPattern::triangle(), 60, 11);
  EXPECT_EQ(curve.regime, EmergenceRegime::Critical);
  ASSERT_EQ(curve.points.size(), 2u);
  EXPECT_LT(curve.points[0].fraction, 0.1);
  EXPECT_GT(curve.points[1].fraction, 0.9);
}

TEST(Emergence, TriangleVanishesBelowThreshold) {
  const EmergenceCurve curve =
      subgraph_emergence({8, 32, 128}, {2.0}, 2.0, SubgraphPattern::triangle(), 60, 12);
  EXPECT_EQ(curve.regime, EmergenceRegime::Below);
  EXPECT_GE(curve.points[0].fraction, curve.points[2].fraction);
  EXPECT_EQ(curve.points[2].fraction, 0.0);
}

TEST(Emergence, ThreadCountDoesNotChangeResult) {
  const auto run = [](unsigned threads) {
    return subgraph_emergence({24, 40}, {0.5, 1.0, 2.0}, 1.0, SubgraphPattern::triangle(), 20, 5,
                              threads);
  };
  const EmergenceCurve a = run(1);
  const EmergenceCurve b = run(3);
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].fraction, b.points[i].fraction);
}

TEST(BondPercolation, FullyOpenLatticeSpans) {
  const ClusterStats s = bond_percolation({8, 6}, 1.0, 5, 0);
  EXPECT_EQ(s.spanning_probability, 1.0);
  EXPECT_EQ(s.largest_fraction_mean, 1.0);
  for (const TrialRecord& t : s.trials) {
    EXPECT_EQ(t.clusters, 1u);
    EXPECT_EQ(t.open_bonds, 7u * 6u + 8u * 5u);
  }
}

TEST(BondPercolation, ClosedLatticeIsSingletons) {
  const ClusterStats s = bond_percolation({8, 6}, 0.0, 5, 0);
  EXPECT_EQ(s.spanning_probability, 0.0);
  EXPECT_EQ(s.spanning_ci.first, 0.0);
  EXPECT_EQ(s.size_histogram.size(), 1u);
  EXPECT_EQ(s.size_histogram.at(1), 48u * 5u);
}

TEST(BondPercolation, HistogramCoversEveryNode) {
  for (double p : {0.2, 0.5, 0.8}) {
    const ClusterStats s = bond_percolation({12, 9}, p, 20, 3);
    std::size_t covered = 0;
    for (const auto& [size, count] : s.size_histogram) covered += size * count;
    EXPECT_EQ(covered, s.nodes * 20u);
    for (const TrialRecord& t : s.trials) {
      EXPECT_GE(t.largest_fraction, 0.0);
      EXPECT_LE(t.largest_fraction, 1.0);
    }
    EXPECT_LE(s.spanning_ci.first, s.spanning_probability);
    EXPECT_GE(s.spanning_ci.second, s.spanning_probability);
  }
}

TEST(BondPercolation, SpanningIsMonotoneUnderCommonRandomNumbers) {
  std::vector<ClusterStats> runs;
  for (int k = 0; k <= 10; ++k) runs.push_back(bond_percolation({16, 16}, 0.1 * k, 30, 21));
  for (std::size_t k = 1; k < runs.size(); ++k) {
    EXPECT_GE(runs[k].spanning_probability, runs[k - 1].spanning_probability);
    for (std::size_t t = 0; t < 30; ++t) {
      EXPECT_GE(runs[k].trials[t].open_bonds, runs[k - 1].trials[t].open_bonds);
      if (runs[k - 1].trials[t].spanning) EXPECT_TRUE(runs[k].trials[t].spanning);
    }
  }
}

TEST(BondPercolation, ThreadCountDoesNotChangeResult) {
  const ClusterStats a = bond_percolation({20, 20}, 0.5, 16, 9, 1);
  const ClusterStats b = bond_percolation({20, 20}, 0.5, 16, 9, 4);
  EXPECT_EQ(a.spanning_probability, b.spanning_probability);
  EXPECT_EQ(a.size_histogram, b.size_histogram);
  for (std::size_t t = 0; t < 16; ++t) EXPECT_EQ(a.trials[t].open_bonds, b.trials[t].open_bonds);
}

TEST(BondPercolation, RejectsBadInput) {
  EXPECT_THROW(bond_percolation({1, 5}, 0.5, 1, 0), ValidationError);
  EXPECT_THROW(bond_percolation({5, 5}, 1.5, 1, 0), ValidationError);
  EXPECT_THROW(bond_percolation({5, 5}, 0.5, 0, 0), ValidationError);
}

TEST(EntanglementPercolation, ProductAndMaximalLinks) {
  EXPECT_EQ(cep_lattice({16, 16}, LinkState(0.0), 20, 0).spanning_probability, 0.0);
  EXPECT_EQ(cep_lattice({16, 16}, LinkState(1.0), 20, 0).spanning_probability, 1.0);
}

TEST(EntanglementPercolation, EqualsBondPercolationAtScp) {
  const ClusterStats a = cep_lattice({16, 16}, LinkState(0.55), 25, 4);
  const ClusterStats b = bond_percolation({16, 16}, 0.55, 25, 4);
  EXPECT_EQ(a.spanning_probability, b.spanning_probability);
  EXPECT_EQ(a.size_histogram, b.size_histogram);
}

TEST(EntanglementPercolation, RandomGraphClusters) {
  const ClusterStats full = cep_random_graph(20, LinkState(1.0), 3, 0);
  EXPECT_EQ(full.largest_fraction_mean, 1.0);
  EXPECT_EQ(full.spanning_probability, 0.0);
  const ClusterStats none = cep_random_graph(20, LinkState(0.0), 3, 0);
  EXPECT_NEAR(none.largest_fraction_mean, 1.0 / 20.0, 1e-15);
}

TEST(SpanningCurve, CrossingInterpolation) {
  const SpanningCurve c = spanning_curve({16, 16}, {0.0, 0.5, 1.0}, 40, 2);
  ASSERT_EQ(c.spanning_probability.size(), 3u);
  EXPECT_EQ(c.spanning_probability.front(), 0.0);
  EXPECT_EQ(c.spanning_probability.back(), 1.0);
  ASSERT_TRUE(c.crossing.has_value());
  EXPECT_GT(*c.crossing, 0.0);
  EXPECT_LT(*c.crossing, 1.0);
}
