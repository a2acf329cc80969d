#pragma once

// Exact and sampled (1,2)- and (1,1,1)-discrepancy of 3-graphs.
//
// For a vertex set X and a set P of pairs, e12(X, P) counts pairs
// (x, {u, v}) in X x P with {x, u, v} an edge. For vertex sets X, Y, Z,
// e111(X, Y, Z) counts ordered triples (x, y, z) in X x Y x Z with
// {x, y, z} an edge. The discrepancy D at density p is the maximum of
// |e12(X, P) - p|X||P|| (resp. |e111 - p|X||Y||Z||) over all choices; the
// smallest eps with D <= eps * n^3 is eps* = D / n^3.

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "degex/hypergraph.hpp"
#include "degex/numeric.hpp"

namespace degex {

using VertexPair = std::pair<Vertex, Vertex>;

enum class QrKind { k12, k111 };
enum class QrMode { exact, sampled };

inline constexpr std::uint32_t kDefaultExactLimit12 = 22;
inline constexpr std::uint32_t kDefaultExactLimit111 = 13;

struct Witness12 {
  VertexList x;
  std::vector<VertexPair> pairs;  // u < v, in colex order
  friend bool operator==(const Witness12&, const Witness12&) = default;
};

struct Witness111 {
  VertexList x;
  VertexList y;
  VertexList z;
  friend bool operator==(const Witness111&, const Witness111&) = default;
};

struct DiscrepancyReport {
  QrKind kind = QrKind::k12;
  QrMode mode = QrMode::exact;
  std::uint32_t n = 0;
  Rational p;
  Rational discrepancy;  // D
  Rational eps_star;     // D / n^3
  std::variant<Witness12, Witness111> witness;
  std::uint64_t trials = 0;  // sampled mode only

  friend bool operator==(const DiscrepancyReport&, const DiscrepancyReport&) = default;
};

struct QrOptions {
  unsigned threads = 1;
  std::uint32_t exact_limit = 0;  // 0 selects the per-kind default
};

std::uint64_t e12(const Hypergraph& g, std::span<const Vertex> x, std::span<const VertexPair> pairs);
std::uint64_t e111(const Hypergraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                   std::span<const Vertex> z);

/// Exact (1,2)-discrepancy. X runs over all 2^n subsets in Gray-code order
/// with pair degrees d_X(uv) maintained incrementally; for each X the best P
/// is the positive or the negative support of d_X(uv) - p|X|. Ties go to the
/// smallest X (as a bitmask, i.e. colex), then to the positive support.
/// Refuses with LimitExceeded above the exact limit.
DiscrepancyReport deviation_12_exact(const Hypergraph& g, const Rational& p, const QrOptions& options = {});

/// Maximum over `trials` random X (trial i uses Rng::stream(seed, i)), P
/// still optimal. When trials >= 2^n every X is visited instead, which
/// reproduces the exact value. Requires n <= 64.
DiscrepancyReport deviation_12_sampled(const Hypergraph& g, const Rational& p, std::uint64_t trials,
                                       std::uint64_t seed, unsigned threads = 1);

/// Exact (1,1,1)-discrepancy over all (X, Y) with the optimal Z.
DiscrepancyReport deviation_111_exact(const Hypergraph& g, const Rational& p, const QrOptions& options = {});

/// Checks delta_2^{sqrt(eps*)}(G) >= (p - 4 sqrt(eps*)) n with
/// eps* = deviation_12_exact(G, p).D / n^3.
struct ImplicationVerdict {
  Rational discrepancy;
  Rational eps_star;
  std::uint64_t exceptions_allowed = 0;  // floor(sqrt(eps*) * C(n, 2))
  bool capped = false;
  std::uint64_t lhs = 0;  // delta_2^{sqrt(eps*)}(G)
  Real rhs;               // (p - 4 sqrt(eps*)) n
  bool holds = false;
};

ImplicationVerdict check_qr_codegree_implication(const Hypergraph& g, const Rational& p,
                                                 const QrOptions& options = {});

std::string to_string(QrKind kind);
std::string to_string(QrMode mode);

}  // namespace degex
