#pragma once

#include <cstdint>
#include <vector>

#include "degex/hypergraph.hpp"
#include "degex/numeric.hpp"

namespace degex {

/// Each r-subset of [0, n) is an edge independently with probability p.
/// r-subsets are visited in colex order and r-subset i is kept iff the
/// i-th output u of Rng(seed) satisfies u * den(p) < num(p) * 2^64.
Hypergraph erdos_renyi(std::uint32_t n, std::uint32_t r, const Rational& p, std::uint64_t seed);

/// Balanced partition of [0, n) into N consecutive blocks; the first n mod N
/// blocks have ceil(n/N) vertices, the rest floor(n/N).
struct PartitionSpec {
  std::uint32_t n = 0;
  std::uint32_t parts = 0;
  std::vector<std::uint32_t> begins;  // block i is [begins[i], begins[i + 1]), begins.back() == n

  PartitionSpec(std::uint32_t n, std::uint32_t parts);

  std::uint32_t size(std::uint32_t i) const { return begins[i + 1] - begins[i]; }
  std::uint32_t part_of(Vertex v) const;
};

struct PartitionDeletion {
  Hypergraph graph;
  PartitionSpec partition;
  std::uint64_t deleted = 0;
};

/// Keeps exactly the edges with at most one vertex in every block.
/// Requires 1 <= N <= n and r >= 2.
PartitionDeletion partition_deletion(const Hypergraph& g, std::uint32_t parts);

}  // namespace degex
