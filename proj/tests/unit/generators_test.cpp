#include <gtest/gtest.h>

#include "degex/degree.hpp"
#include "degex/error.hpp"
#include "degex/generators.hpp"
#include "oracles.hpp"

namespace degex {
namespace {

TEST(ErdosRenyi, Extremes) {
  EXPECT_EQ(erdos_renyi(8, 3, Rational(1), 1), Hypergraph::complete(8, 3));
  EXPECT_EQ(erdos_renyi(8, 3, Rational(0), 1).edge_count(), 0U);
  EXPECT_THROW(erdos_renyi(8, 3, Rational(-1, 2), 1), ValidationError);
  EXPECT_THROW(erdos_renyi(8, 3, Rational(3, 2), 1), ValidationError);
}

TEST(ErdosRenyi, Seeded) {
  EXPECT_EQ(erdos_renyi(15, 3, Rational(1, 2), 7), erdos_renyi(15, 3, Rational(1, 2), 7));
  EXPECT_NE(erdos_renyi(15, 3, Rational(1, 2), 7), erdos_renyi(15, 3, Rational(1, 2), 8));
}

TEST(ErdosRenyi, MeanDensity) {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    total += static_cast<double>(erdos_renyi(20, 3, Rational(1, 2), seed).edge_count()) / 1140.0;
  }
  EXPECT_NEAR(total / 200, 0.5, 0.02);
  double third = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    third += static_cast<double>(erdos_renyi(20, 3, Rational(1, 3), seed).edge_count()) / 1140.0;
  }
  EXPECT_NEAR(third / 200, 1.0 / 3.0, 0.02);
}

TEST(PartitionSpec, Layout) {
  const PartitionSpec spec(11, 3);
  EXPECT_EQ(spec.begins, (std::vector<std::uint32_t>{0, 4, 8, 11}));
  EXPECT_EQ(spec.size(0), 4U);
  EXPECT_EQ(spec.size(2), 3U);
  EXPECT_EQ(spec.part_of(7), 1U);
  EXPECT_EQ(spec.part_of(8), 2U);
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned parts = 1; parts <= n; ++parts) {
      const PartitionSpec s(n, parts);
      ASSERT_EQ(s.begins.front(), 0U);
      ASSERT_EQ(s.begins.back(), n);
      for (unsigned i = 0; i < parts; ++i) {
        ASSERT_GE(s.size(i), n / parts);
        ASSERT_LE(s.size(i), (n + parts - 1) / parts);
        if (i > 0) ASSERT_LE(s.size(i), s.size(i - 1));
      }
    }
  }
  EXPECT_THROW(PartitionSpec(5, 0), ValidationError);
  EXPECT_THROW(PartitionSpec(5, 6), ValidationError);
}

TEST(PartitionDeletion, Examples) {
  const Hypergraph k6 = Hypergraph::complete(6, 3);
  const PartitionDeletion two = partition_deletion(k6, 2);
  EXPECT_EQ(two.graph.edge_count(), 0U);
  EXPECT_EQ(two.deleted, 20U);
  const PartitionDeletion three = partition_deletion(k6, 3);
  EXPECT_EQ(three.graph.edge_count(), 8U);
  EXPECT_EQ(three.deleted, 12U);
  EXPECT_EQ(partition_deletion(k6, 6).graph, k6);
  EXPECT_THROW(partition_deletion(k6, 7), ValidationError);
  EXPECT_THROW(partition_deletion(Hypergraph::complete(4, 1), 2), ValidationError);
}

TEST(PartitionDeletion, Properties) {
  for (unsigned n = 8; n <= 11; ++n) {
    for (unsigned parts = 2; parts <= 4; ++parts) {
      const Hypergraph g = erdos_renyi(n, 3, Rational(1, 2), n * 10 + parts);
      const PartitionDeletion d = partition_deletion(g, parts);
      ASSERT_EQ(d.deleted + d.graph.edge_count(), g.edge_count());
      const std::uint64_t c = (n + parts - 1) / parts;
      ASSERT_LE(d.deleted, parts * n * c * (c - 1) / 2);
      for (std::size_t i = 0; i < d.graph.edge_count(); ++i) {
        auto e = d.graph.edge(i);
        ASSERT_TRUE(g.contains(e));
        ASSERT_NE(d.partition.part_of(e[0]), d.partition.part_of(e[1]));
        ASSERT_NE(d.partition.part_of(e[1]), d.partition.part_of(e[2]));
        ASSERT_NE(d.partition.part_of(e[0]), d.partition.part_of(e[2]));
      }
      for_each_ksubset(n, parts + 1, [&](std::span<const Vertex> x) {
        ASSERT_EQ(oracle::induced_min_degree(d.graph, VertexList(x.begin(), x.end()), 2), 0U);
      });
    }
  }
}

}  // namespace
}  // namespace degex
