#pragma once

// Extraction of induced m-vertex subgraphs with high minimum ell-degree,
// plus exact finite audits of the counting argument behind it.
//
// Terminology, for an r-graph G on n vertices, density p and margin delta:
//   poor ell-subset S: deg(S) < p * C(n - ell, r - ell); rich otherwise.
//   bad threshold:     t = (p - delta) * C(m - ell, r - ell).
//   T bad for rich S:  |N(S) ∩ T^(r - ell)| <= t, T an (m - ell)-subset of V \ S.
//   good m-subset X:   every ell-subset of X has degree > t in G[X].

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "degex/hypergraph.hpp"
#include "degex/numeric.hpp"

namespace degex {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;

struct EnumerationOptions {
  std::uint64_t limit = kDefaultEnumerationLimit;
  unsigned threads = 1;
};

/// Constants of the extraction theorem for (r, ell, delta, m).
struct TheoremParams {
  std::uint32_t r = 0;
  std::uint32_t ell = 0;
  Rational delta;
  std::uint32_t m = 0;
  /// ceil(26 * ell * (r - ell)^2 * delta^-2 * ln(1/delta))
  std::uint64_t m0 = 0;
  /// The quantity under the ceiling, before rounding.
  Real m0_unrounded;
  /// m^-ell / 2
  Rational eps;
  /// delta^-1 >= 26 * ell * (r - ell)^2 * ln(1/delta)  and  ell * ln(1/delta) >= ln 2
  bool delta_valid = false;
};

/// Requires 1 <= ell < r, 0 < delta < 1 and m >= r. An invalid delta is
/// reported through delta_valid, not rejected.
TheoremParams theorem_params(std::uint32_t r, std::uint32_t ell, const Rational& delta, std::uint32_t m);

/// The bad/good boundary t = (p - delta) * C(m - ell, r - ell) and the
/// smallest integer degree strictly above it.
struct DegreeThreshold {
  Rational bound;
  std::uint64_t required = 0;
  friend bool operator==(const DegreeThreshold&, const DegreeThreshold&) = default;
};

DegreeThreshold good_threshold(std::uint32_t r, std::uint32_t ell, std::uint32_t m, const Rational& p,
                               const Rational& delta);

struct ExtractionReport {
  bool success = false;
  std::optional<VertexList> subset;
  std::uint64_t achieved_min_degree = 0;
  DegreeThreshold threshold;
  std::uint64_t attempts = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ExtractionReport&, const ExtractionReport&) = default;
};

/// min_degree(G[X], ell) through edge-membership lookups on the r-subsets
/// of X. `subset` must be strictly increasing.
std::uint64_t induced_min_degree(const Hypergraph& g, std::span<const Vertex> subset, std::uint32_t ell);

/// Samples up to `budget` uniform m-subsets; attempt i draws from
/// Rng::stream(seed, i). Stops at the first good subset. Otherwise reports
/// the first subset with the largest minimum degree seen. The reported
/// subset is always rechecked through induced() + degree_table().
ExtractionReport extract_random(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                                const Rational& delta, std::uint64_t budget, std::uint64_t seed,
                                unsigned threads = 1);

struct ExhaustiveResult {
  std::vector<std::uint64_t> good_ranks;  // colex ranks of good m-subsets, ascending
  std::uint64_t examined = 0;             // C(n, m)
  DegreeThreshold threshold;

  std::uint64_t count() const noexcept { return good_ranks.size(); }
};

/// Every good m-subset. Refuses with LimitExceeded when C(n, m) > options.limit.
ExhaustiveResult extract_exhaustive(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                                    const Rational& delta, const EnumerationOptions& options = {});

enum class Inequality { eq3_rich_count, eq2_phi_bound, bad_total_bound };
enum class Relation { at_least, at_most };

using AuditValue = std::variant<Rational, Real>;
using ContextValue = std::variant<Rational, Real, VertexList>;

struct NamedValue {
  std::string name;
  ContextValue value;
};

struct AuditReport {
  Inequality inequality_id = Inequality::eq3_rich_count;
  Rational lhs;
  AuditValue rhs;
  Relation relation = Relation::at_least;
  bool holds = false;
  /// Parameters and intermediate quantities, in a fixed order.
  std::vector<NamedValue> context;
};

/// lhs: number of m-subsets containing no poor ell-subset.
/// rhs: (1 - eps_eff * m^ell) * C(n, m), eps_eff = |poor| / C(n, ell).
/// holds <=> lhs >= rhs; a union bound, so it must always hold.
AuditReport audit_eq3(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                      const EnumerationOptions& options = {});

/// Exact phi_S: the number of (m - ell)-subsets T of V \ S that are bad for S.
/// S must be rich. Requires n <= 64.
std::uint64_t count_bad_for(const Hypergraph& g, std::span<const Vertex> s, std::uint32_t m, const Rational& p,
                            const Rational& delta);

/// lhs: phi_S. rhs: C(n - ell, m - ell) * exp(-delta^2 m / (2 (r - ell)^2)).
/// holds <=> lhs <= rhs. Diagnostic only.
AuditReport audit_eq2_phi(const Hypergraph& g, std::span<const Vertex> s, std::uint32_t m, const Rational& p,
                          const Rational& delta, const EnumerationOptions& options = {});

/// lhs: sum of phi_S over rich S. rhs: C(n, m) / 2. Also records the
/// intermediate bound C(n, m) * C(m, ell) * exp(-delta^2 m / (2 (r - ell)^2)).
/// holds <=> lhs <= rhs. Diagnostic only.
AuditReport audit_bad_total(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                            const Rational& delta, const EnumerationOptions& options = {});

std::string to_string(Inequality id);
std::string to_string(Relation relation);

}  // namespace degex
