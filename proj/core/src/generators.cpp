#include "degex/generators.hpp"

#include <algorithm>
#include <limits>

#include "degex/error.hpp"
#include "degex/rng.hpp"

namespace degex {

Hypergraph erdos_renyi(std::uint32_t n, std::uint32_t r, const Rational& p, std::uint64_t seed) {
  require_unit_interval(p, "p");
  const BigInt& num_big = boost::multiprecision::numerator(p);
  const BigInt& den_big = boost::multiprecision::denominator(p);
  if (den_big > std::numeric_limits<std::uint64_t>::max()) {
    throw ValidationError("edge probability denominator must fit in 64 bits");
  }
  const auto num = static_cast<std::uint64_t>(num_big);
  const auto den = static_cast<std::uint64_t>(den_big);
  const unsigned __int128 cut = static_cast<unsigned __int128>(num) << 64;

  if (r == 0) throw ValidationError("uniformity r must be at least 1");
  const std::uint64_t universe = binom_u64(n, r);
  Rng rng(seed);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t rank = 0; rank < universe; ++rank) {
    if (static_cast<unsigned __int128>(rng()) * den < cut) ranks.push_back(rank);
  }
  return Hypergraph::from_ranks(n, r, std::move(ranks));
}

PartitionSpec::PartitionSpec(std::uint32_t n_, std::uint32_t parts_) : n(n_), parts(parts_) {
  if (parts == 0 || parts > n) {
    throw ValidationError("part count N must satisfy 1 <= N <= n = " + std::to_string(n) + ", got " +
                          std::to_string(parts));
  }
  begins.resize(parts + 1);
  const std::uint32_t small = n / parts;
  const std::uint32_t large_count = n % parts;
  for (std::uint32_t i = 0; i < parts; ++i) begins[i + 1] = begins[i] + small + (i < large_count ? 1 : 0);
}

std::uint32_t PartitionSpec::part_of(Vertex v) const {
  auto it = std::upper_bound(begins.begin(), begins.end(), v);
  return static_cast<std::uint32_t>(it - begins.begin()) - 1;
}

PartitionDeletion partition_deletion(const Hypergraph& g, std::uint32_t parts) {
  if (g.r() < 2) throw ValidationError("partition deletion needs r >= 2");
  PartitionSpec spec(g.n(), parts);
  std::vector<std::uint32_t> part(g.n());
  for (Vertex v = 0; v < g.n(); ++v) part[v] = spec.part_of(v);

  std::vector<std::uint64_t> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    // Blocks are consecutive and e is sorted, so a doubled block shows up
    // as two adjacent vertices in the same block.
    bool transversal = true;
    for (std::size_t j = 1; j < e.size() && transversal; ++j) transversal = part[e[j - 1]] != part[e[j]];
    if (transversal) kept.push_back(g.edge_ranks()[i]);
  }
  const std::uint64_t deleted = g.edge_count() - kept.size();
  return {Hypergraph::from_ranks(g.n(), g.r(), std::move(kept)), std::move(spec), deleted};
}

}  // namespace degex
