#include <gtest/gtest.h>

#include "degex/error.hpp"
#include "degex/generators.hpp"
#include "degex/hypergraph.hpp"
#include "oracles.hpp"

namespace degex {
namespace {

Hypergraph make(unsigned n, unsigned r, std::vector<VertexList> edges) {
  return Hypergraph::build(n, r, edges);
}

TEST(Hypergraph, Construction) {
  EXPECT_EQ(make(5, 3, {}).edge_count(), 0U);
  EXPECT_EQ(make(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), Hypergraph::complete(4, 3));
  const Hypergraph g = make(5, 3, {{0, 1, 2}, {2, 1, 0}});
  ASSERT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(std::vector<Vertex>(g.edge(0).begin(), g.edge(0).end()), (VertexList{0, 1, 2}));
}

TEST(Hypergraph, EdgesSortedByColexRank) {
  const Hypergraph g = make(6, 3, {{3, 4, 5}, {0, 1, 2}, {1, 2, 4}, {0, 1, 5}});
  for (std::size_t i = 0; i + 1 < g.edge_count(); ++i) EXPECT_LT(g.edge_ranks()[i], g.edge_ranks()[i + 1]);
  EXPECT_TRUE(g.contains(VertexList{1, 2, 4}));
  EXPECT_FALSE(g.contains(VertexList{1, 2, 3}));
  EXPECT_FALSE(g.contains(VertexList{1, 2}));
}

TEST(Hypergraph, ValidationNamesTheEdge) {
  try {
    make(5, 3, {{0, 1, 2}, {0, 0, 3}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("edge #1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make(5, 3, {{0, 1, 5}}), ValidationError);
  EXPECT_THROW(make(5, 3, {{0, 1}}), ValidationError);
  EXPECT_THROW(make(5, 0, {}), ValidationError);
}

TEST(Hypergraph, BackendsAgree) {
  // C(400, 4) is past the bitset cutoff, so the second graph uses binary search
  const Hypergraph small = erdos_renyi(30, 3, Rational(1, 3), 11);
  ASSERT_TRUE(small.dense_backend());
  std::vector<VertexList> edges;
  for (std::size_t i = 0; i < small.edge_count(); ++i) {
    VertexList e(small.edge(i).begin(), small.edge(i).end());
    e.push_back(399);
    edges.push_back(e);
  }
  const Hypergraph large = Hypergraph::build(400, 4, edges);
  ASSERT_FALSE(large.dense_backend());
  for_each_ksubset(30, 3, [&](std::span<const Vertex> s) {
    VertexList e(s.begin(), s.end());
    e.push_back(399);
    ASSERT_EQ(small.contains(s), large.contains(e));
  });
}

TEST(Induced, Examples) {
  const Hypergraph k5 = Hypergraph::complete(5, 3);
  const VertexList all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced(k5, all).first, k5);
  EXPECT_EQ(induced(k5, VertexList{0, 2, 3, 4}).first, Hypergraph::complete(4, 3));

  const Hypergraph g = make(5, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
  const auto [h, map] = induced(g, VertexList{0, 1, 2, 3});
  EXPECT_EQ(h.n(), 4U);
  EXPECT_EQ(h.edge_count(), 2U);
}

TEST(Induced, Relabeling) {
  const Hypergraph g = make(7, 3, {{1, 4, 6}, {2, 4, 6}, {0, 1, 2}});
  const auto [h, map] = induced(g, VertexList{6, 1, 4});
  EXPECT_EQ(map.parent_vertices, (VertexList{1, 4, 6}));
  EXPECT_EQ(map.to_parent(2), 6U);
  EXPECT_EQ(map.to_local(4), 1U);
  EXPECT_FALSE(map.to_local(5).has_value());
  ASSERT_EQ(h.edge_count(), 1U);
  EXPECT_TRUE(h.contains(VertexList{0, 1, 2}));
  EXPECT_THROW(induced(g, VertexList{1, 7}), ValidationError);
  EXPECT_THROW(induced(g, VertexList{1, 1}), ValidationError);
}

TEST(Induced, MatchesBruteFilterOnAllSubsets) {
  for (unsigned n = 3; n <= 10; ++n) {
    const Hypergraph g = oracle::random_graph(n, 3, 1, 2, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexList x;
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) x.push_back(v);
      }
      std::size_t expected = 0;
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        expected += std::includes(x.begin(), x.end(), e.begin(), e.end()) ? 1 : 0;
      }
      const Hypergraph h = induced(g, x).first;
      ASSERT_EQ(h.n(), x.size());
      ASSERT_EQ(h.edge_count(), expected);
      ASSERT_LE(h.edge_count(), g.edge_count());
    }
  }
}

TEST(HgFormat, ParseAndSerialize) {
  const Hypergraph g = parse_hg("3 4\n0 1 2\n");
  EXPECT_EQ(g.n(), 4U);
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(serialize_hg(make(5, 3, {})), "3 5\n");
  EXPECT_EQ(serialize_hg(parse_hg("# comment\n3 5\n\n4 3 2\n  # another\n2 1 0\n")), "3 5\n0 1 2\n2 3 4\n");
}

TEST(HgFormat, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_hg(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3\n"), 1U);
  EXPECT_EQ(line_of("# c\n3 x\n"), 2U);
  EXPECT_EQ(line_of("3 5\n0 1 2\n0 1\n"), 3U);
  EXPECT_EQ(line_of("3 5\n0 1 2\n0 1 9\n"), 3U);
  EXPECT_EQ(line_of("3 5\n0 1 1\n"), 2U);
  EXPECT_EQ(line_of(""), 1U);
}

TEST(HgFormat, RoundTrip) {
  const Hypergraph g = oracle::random_graph(12, 3, 100, 220, 4);
  ASSERT_GT(g.edge_count(), 80U);
  const std::string text = serialize_hg(g);
  EXPECT_EQ(parse_hg(text), g);
  EXPECT_EQ(serialize_hg(parse_hg(text)), text);
}

}  // namespace
}  // namespace degex
