#pragma once

// Exact binomials, colex ranking of k-subsets, k-subset enumeration and
// uniform k-subset sampling.
//
// Colex order compares two k-subsets by their largest differing element.
// The rank of a sorted subset {s_0 < s_1 < ... < s_{k-1}} is
// sum_i C(s_i, i + 1), which does not depend on the ground-set size n.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "degex/numeric.hpp"

namespace degex {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

class Rng;

namespace detail {

inline constexpr std::size_t kBinomTableSize = 68;  // C(67, 33) still fits in 64 bits

using BinomTable = std::array<std::array<std::uint64_t, kBinomTableSize>, kBinomTableSize>;

constexpr BinomTable make_binom_table() {
  BinomTable t{};
  for (std::size_t n = 0; n < kBinomTableSize; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

inline constexpr BinomTable kBinom = make_binom_table();

std::uint64_t binom_u64_slow(std::uint64_t n, std::uint64_t k);

}  // namespace detail

/// Exact C(n, k); zero when k > n.
BigInt binom(std::uint64_t n, std::uint64_t k);

/// C(n, k) in 64 bits. Throws OverflowError instead of wrapping.
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n < detail::kBinomTableSize) return detail::kBinom[n][k];
  return detail::binom_u64_slow(n, k);
}

/// A k-subset identified by its colex rank.
struct SubsetId {
  std::uint64_t rank = 0;
  std::uint32_t k = 0;

  friend bool operator==(const SubsetId&, const SubsetId&) = default;
};

/// Rank of a strictly increasing vertex list. Rejects unsorted or
/// duplicated input, and vertices >= n.
SubsetId colex_rank(std::span<const Vertex> subset, std::uint32_t n);

/// Hot-path rank without validation. `subset` must be strictly increasing.
inline std::uint64_t colex_rank_unchecked(std::span<const Vertex> subset) noexcept {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) rank += binom_u64(subset[i], i + 1);
  return rank;
}

/// Inverse of colex_rank. Rejects rank >= C(n, k).
VertexList colex_unrank(std::uint64_t rank, std::uint32_t k, std::uint32_t n);

/// Writes the subset of colex rank `rank` (size out.size()) into `out`.
/// No range check on n.
void colex_unrank_into(std::uint64_t rank, std::span<Vertex> out);

/// Advances `subset` to its colex successor among k-subsets of [0, n).
/// Returns false (leaving `subset` unspecified) past the last subset.
inline bool next_colex(std::span<Vertex> subset, std::uint32_t n) noexcept {
  const std::size_t k = subset.size();
  if (k == 0) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (subset[i] + 1 < subset[i + 1]) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<Vertex>(j);
      return true;
    }
  }
  if (subset[k - 1] + 1 < n) {
    ++subset[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) subset[j] = static_cast<Vertex>(j);
    return true;
  }
  return false;
}

/// Next bitmask with the same popcount. Increasing integer order of k-bit
/// masks is colex order of the corresponding subsets.
inline std::uint64_t next_same_popcount(std::uint64_t mask) noexcept {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  return ripple | (((ripple ^ mask) >> 2) >> std::countr_zero(mask));
}

/// Calls fn(std::span<const Vertex>) on the k-subsets of [0, n) whose colex
/// rank lies in [first, last), in increasing rank order.
template <typename Fn>
void for_each_ksubset_in_range(std::uint32_t n, std::uint32_t k, std::uint64_t first,
                               std::uint64_t last, Fn&& fn) {
  if (first >= last) return;
  VertexList s(k);
  colex_unrank_into(first, s);
  for (std::uint64_t rank = first;;) {
    fn(std::span<const Vertex>(s));
    if (++rank == last) break;
    next_colex(s, n);
  }
}

/// Calls fn on all C(n, k) k-subsets of [0, n) in colex order.
template <typename Fn>
void for_each_ksubset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  for_each_ksubset_in_range(n, k, 0, binom_u64(n, k), std::forward<Fn>(fn));
}

/// Uniform random k-subset of [0, n), sorted ascending (Floyd's algorithm).
VertexList random_ksubset(std::uint32_t n, std::uint32_t k, Rng& rng);

}  // namespace degex
