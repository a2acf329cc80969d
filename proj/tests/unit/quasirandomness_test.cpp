#include <gtest/gtest.h>

#include "degex/error.hpp"
#include "degex/generators.hpp"
#include "degex/quasirandomness.hpp"
#include "degex/rng.hpp"
#include "oracles.hpp"

namespace degex {
namespace {

std::vector<VertexPair> all_pairs(unsigned n) {
  std::vector<VertexPair> out;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) out.emplace_back(u, v);
  }
  return out;
}

TEST(E12, Examples) {
  const Hypergraph k4 = Hypergraph::complete(4, 3);
  const VertexList all{0, 1, 2, 3};
  const auto pairs = all_pairs(4);
  EXPECT_EQ(e12(k4, {}, pairs), 0U);
  EXPECT_EQ(e12(k4, all, {}), 0U);
  EXPECT_EQ(e12(k4, all, pairs), 12U);
  const std::vector<VertexList> edge{{0, 1, 2}};
  const Hypergraph single = Hypergraph::build(3, 3, edge);
  const std::vector<VertexPair> p{{1, 2}};
  EXPECT_EQ(e12(single, VertexList{0}, p), 1U);
  EXPECT_THROW(e12(Hypergraph::complete(4, 2), all, pairs), ValidationError);
}

TEST(E111, OrderedTriples) {
  const std::vector<VertexList> edge{{0, 1, 2}};
  const Hypergraph single = Hypergraph::build(3, 3, edge);
  const VertexList all{0, 1, 2};
  EXPECT_EQ(e111(single, all, all, all), 6U);
  EXPECT_EQ(e111(single, VertexList{0}, VertexList{0, 1}, VertexList{2}), 1U);
}

TEST(Deviation12, Examples) {
  const DiscrepancyReport empty = deviation_12_exact(Hypergraph::build(5, 3, {}), Rational(0));
  EXPECT_EQ(empty.discrepancy, Rational(0));
  const DiscrepancyReport k4 = deviation_12_exact(Hypergraph::complete(4, 3), Rational(1));
  EXPECT_EQ(k4.discrepancy, Rational(12));
  EXPECT_EQ(k4.eps_star, Rational(12, 64));
  const auto& w = std::get<Witness12>(k4.witness);
  EXPECT_EQ(w.x, (VertexList{0, 1, 2, 3}));
  EXPECT_EQ(w.pairs, all_pairs(4));
}

TEST(Deviation12, WitnessAttainsDiscrepancy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph g = erdos_renyi(9, 3, Rational(1, 2), seed);
    for (const Rational p : {Rational(1, 4), Rational(1, 2), Rational(5, 7)}) {
      const DiscrepancyReport report = deviation_12_exact(g, p);
      const auto& w = std::get<Witness12>(report.witness);
      Rational dev = Rational(e12(g, w.x, w.pairs)) -
                     p * Rational(static_cast<long long>(w.x.size() * w.pairs.size()));
      if (dev < 0) dev = -dev;
      ASSERT_EQ(dev, report.discrepancy);
    }
  }
}

TEST(Deviation12, MatchesBruteForce) {
  for (unsigned n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < (n == 5 ? 6U : 10U); ++seed) {
      const Hypergraph g = oracle::random_graph(n, 3, 1, 2, 1000 * n + seed);
      for (const Rational p : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        ASSERT_EQ(deviation_12_exact(g, p).discrepancy, oracle::brute_deviation_12(g, p)) << n << " " << seed;
      }
    }
  }
}

TEST(Deviation12, InnerMaxBeatsRandomPairSets) {
  const Hypergraph g = erdos_renyi(7, 3, Rational(1, 2), 77);
  const Rational p(2, 5);
  const DiscrepancyReport report = deviation_12_exact(g, p);
  const auto pairs = all_pairs(7);
  Rng rng(1);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    VertexList x;
    for (Vertex v = 0; v < 7; ++v) {
      if ((mask >> v) & 1U) x.push_back(v);
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<VertexPair> chosen;
      const std::uint64_t pick = rng();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((pick >> i) & 1U) chosen.push_back(pairs[i]);
      }
      Rational dev = Rational(e12(g, x, chosen)) - p * Rational(static_cast<long long>(x.size() * chosen.size()));
      if (dev < 0) dev = -dev;
      ASSERT_LE(dev, report.discrepancy);
    }
  }
}

TEST(Deviation12, ThreadsAgree) {
  const Hypergraph g = erdos_renyi(14, 3, Rational(1, 2), 5);
  const DiscrepancyReport one = deviation_12_exact(g, Rational(1, 2));
  for (unsigned threads : {2U, 3U, 8U}) {
    QrOptions options;
    options.threads = threads;
    EXPECT_EQ(deviation_12_exact(g, Rational(1, 2), options), one);
  }
}

TEST(Deviation12, RefusesAboveLimit) {
  QrOptions options;
  options.exact_limit = 10;
  EXPECT_THROW(deviation_12_exact(Hypergraph::complete(11, 3), Rational(1, 2), options), LimitExceeded);
  EXPECT_THROW(deviation_12_exact(Hypergraph::complete(6, 4), Rational(1, 2)), ValidationError);
}

TEST(Deviation12Sampled, BoundedByExactAndMonotone) {
  const Hypergraph g = erdos_renyi(12, 3, Rational(1, 2), 12);
  const DiscrepancyReport exact = deviation_12_exact(g, Rational(1, 2));
  Rational previous = 0;
  for (std::uint64_t trials : {1U, 10U, 100U, 1000U}) {
    const DiscrepancyReport sampled = deviation_12_sampled(g, Rational(1, 2), trials, 3);
    EXPECT_EQ(sampled.mode, QrMode::sampled);
    EXPECT_LE(sampled.discrepancy, exact.discrepancy);
    EXPECT_GE(sampled.discrepancy, previous);
    previous = sampled.discrepancy;
    EXPECT_EQ(deviation_12_sampled(g, Rational(1, 2), trials, 3, 4), sampled);
  }
  const DiscrepancyReport full = deviation_12_sampled(g, Rational(1, 2), 4096, 3);
  EXPECT_EQ(full.discrepancy, exact.discrepancy);
  EXPECT_EQ(full.witness, exact.witness);
  EXPECT_EQ(deviation_12_sampled(Hypergraph::build(30, 3, {}), Rational(0), 50, 1).discrepancy, Rational(0));
}

TEST(Deviation111, Examples) {
  EXPECT_EQ(deviation_111_exact(Hypergraph::build(4, 3, {}), Rational(0)).discrepancy, Rational(0));
  const std::vector<VertexList> edge{{0, 1, 2}};
  const DiscrepancyReport single = deviation_111_exact(Hypergraph::build(3, 3, edge), Rational(0));
  EXPECT_EQ(single.discrepancy, Rational(6));
  const auto& w = std::get<Witness111>(single.witness);
  EXPECT_EQ(e111(Hypergraph::build(3, 3, edge), w.x, w.y, w.z), 6U);
}

TEST(Deviation111, MatchesBruteForce) {
  for (unsigned n = 3; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Hypergraph g = oracle::random_graph(n, 3, 1, 2, 77 * n + seed);
      for (const Rational p : {Rational(0), Rational(1, 2), Rational(1)}) {
        ASSERT_EQ(deviation_111_exact(g, p).discrepancy, oracle::brute_deviation_111(g, p));
      }
    }
  }
}

TEST(Implication, CompleteGraphs) {
  for (unsigned n = 3; n <= 12; ++n) {
    const ImplicationVerdict v = check_qr_codegree_implication(Hypergraph::complete(n, 3), Rational(1));
    EXPECT_EQ(v.eps_star, Rational(n - 1, n * n));
    EXPECT_EQ(v.lhs, n - 2);
    EXPECT_TRUE(v.holds) << n;
  }
}

TEST(Implication, EmptyGraph) {
  const ImplicationVerdict v = check_qr_codegree_implication(Hypergraph::build(8, 3, {}), Rational(0));
  EXPECT_EQ(v.eps_star, Rational(0));
  EXPECT_LE(v.rhs, 0);
  EXPECT_TRUE(v.holds);
}

TEST(Implication, PartitionDeletionComposition) {
  const Hypergraph g = erdos_renyi(10, 3, Rational(1, 2), 4);
  for (unsigned parts : {2U, 3U, 4U}) {
    const PartitionDeletion d = partition_deletion(g, parts);
    const Rational before = deviation_12_exact(g, Rational(1, 2)).discrepancy;
    const Rational after = deviation_12_exact(d.graph, Rational(1, 2)).discrepancy;
    EXPECT_LE(after, before + Rational(3 * static_cast<long long>(d.deleted)));
  }
}

}  // namespace
}  // namespace degex
