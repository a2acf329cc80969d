#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degex/combinatorics.hpp"

namespace degex {

/// Immutable r-uniform hypergraph on vertices [0, n).
///
/// Edges are stored sorted by colex rank. Membership queries go through a
/// bitset over all C(n, r) ranks when that is small enough, otherwise
/// through binary search on the sorted rank vector.
class Hypergraph {
 public:
  /// Validates and canonicalizes `edges` (vertices sorted within each edge,
  /// duplicates removed). Throws ValidationError naming the first edge with
  /// the wrong arity, a repeated vertex, or a vertex >= n.
  static Hypergraph build(std::uint32_t n, std::uint32_t r, std::span<const VertexList> edges);

  /// Same as build, from colex ranks of r-subsets.
  static Hypergraph from_ranks(std::uint32_t n, std::uint32_t r, std::vector<std::uint64_t> ranks);

  static Hypergraph complete(std::uint32_t n, std::uint32_t r);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t r() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return ranks_.size(); }

  /// i-th edge in colex order, as a sorted vertex list.
  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {vertices_.data() + i * r_, r_};
  }
  std::span<const std::uint64_t> edge_ranks() const noexcept { return ranks_; }

  /// `subset` must be strictly increasing; any size other than r is simply absent.
  bool contains(std::span<const Vertex> subset) const noexcept {
    return subset.size() == r_ && contains_rank(colex_rank_unchecked(subset));
  }
  bool contains_rank(std::uint64_t rank) const noexcept;

  bool dense_backend() const noexcept { return !bits_.empty() || universe_ == 0; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.ranks_ == b.ranks_;
  }

 private:
  Hypergraph(std::uint32_t n, std::uint32_t r, std::vector<std::uint64_t> sorted_unique_ranks);

  std::uint32_t n_ = 0;
  std::uint32_t r_ = 1;
  std::uint64_t universe_ = 0;  // C(n, r)
  std::vector<std::uint64_t> ranks_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> bits_;
};

/// Order-preserving relabeling between an induced subgraph and its parent.
struct InducedMap {
  VertexList parent_vertices;  // sorted; local vertex i is parent_vertices[i]

  Vertex to_parent(Vertex local) const { return parent_vertices.at(local); }
  std::optional<Vertex> to_local(Vertex parent) const;
};

/// G[X]: the vertices of X (any order, no duplicates) with every edge of G
/// inside X, relabeled to [0, |X|) in increasing parent order.
std::pair<Hypergraph, InducedMap> induced(const Hypergraph& g, std::span<const Vertex> subset);

/// `.hg` text format: first non-comment line "<r> <n>", then one edge per
/// non-empty line as r whitespace-separated 0-based vertices. Lines whose
/// first non-blank character is '#' are comments.
Hypergraph parse_hg(std::string_view text);

/// Canonical `.hg` text: header, then edges in colex order, LF endings.
std::string serialize_hg(const Hypergraph& g);

Hypergraph read_hg_file(const std::filesystem::path& path);
void write_hg_file(const std::filesystem::path& path, const Hypergraph& g);

}  // namespace degex
