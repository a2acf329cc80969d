#include "degex/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "degex/error.hpp"
#include "degex/rng.hpp"

namespace degex {

namespace detail {

std::uint64_t binom_u64_slow(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  if (n < kBinomTableSize) return kBinom[n][k];
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // acc = C(n, i) exactly; C(n, i) * (n - i) is divisible by i + 1.
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

BigInt binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

SubsetId colex_rank(std::span<const Vertex> subset, std::uint32_t n) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) {
      throw ValidationError("vertex " + std::to_string(subset[i]) + " out of range for n = " +
                            std::to_string(n));
    }
    if (i > 0 && subset[i - 1] >= subset[i]) {
      throw ValidationError("subset must be strictly increasing");
    }
  }
  return SubsetId{colex_rank_unchecked(subset), static_cast<std::uint32_t>(subset.size())};
}

void colex_unrank_into(std::uint64_t rank, std::span<Vertex> out) {
  // Greedy from the top: the largest element is the largest v with C(v, k) <= rank.
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::uint64_t k = i + 1;
    auto at_most_rank = [&](std::uint64_t v) {
      try {
        return binom_u64(v, k) <= rank;
      } catch (const OverflowError&) {
        return false;
      }
    };
    std::uint64_t lo = i;
    std::uint64_t step = 1;
    while (at_most_rank(lo + step)) {
      lo += step;
      step *= 2;
    }
    // C(lo, k) <= rank < C(lo + step, k)
    std::uint64_t hi = lo + step - 1;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (at_most_rank(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[i] = static_cast<Vertex>(lo);
    rank -= binom_u64(lo, k);
  }
}

VertexList colex_unrank(std::uint64_t rank, std::uint32_t k, std::uint32_t n) {
  if (k > n || rank >= binom_u64(n, k)) {
    throw ValidationError("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                          ", " + std::to_string(k) + ")");
  }
  VertexList out(k);
  colex_unrank_into(rank, out);
  return out;
}

VertexList random_ksubset(std::uint32_t n, std::uint32_t k, Rng& rng) {
  if (k > n) {
    throw ValidationError("cannot sample a " + std::to_string(k) + "-subset of " + std::to_string(n) +
                          " vertices");
  }
  VertexList chosen;
  chosen.reserve(k);
  for (std::uint32_t j = n - k; j < n; ++j) {
    auto t = static_cast<Vertex>(rng.uniform(std::uint64_t{j} + 1));
    auto pos = std::lower_bound(chosen.begin(), chosen.end(), t);
    if (pos != chosen.end() && *pos == t) {
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), j), j);
    } else {
      chosen.insert(pos, t);
    }
  }
  return chosen;
}

}  // namespace degex
