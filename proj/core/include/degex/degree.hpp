#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "degex/hypergraph.hpp"
#include "degex/numeric.hpp"

namespace degex {

/// deg(S) for every ell-subset S of [0, n), indexed by colex rank.
struct DegreeTable {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint32_t ell = 0;
  std::vector<std::uint64_t> degrees;

  /// C(n - ell, r - ell): the largest possible degree.
  std::uint64_t max_possible() const { return n < ell ? 0 : binom_u64(n - ell, r - ell); }
};

/// Number of edges containing S. S is any strictly increasing list of
/// fewer than r vertices. Scans the edge list.
std::uint64_t degree_of(const Hypergraph& g, std::span<const Vertex> s);

/// One pass over the edges; each edge increments its C(r, ell) ell-subsets.
/// With threads > 1 the edge list is split and partial tables are summed.
DegreeTable degree_table(const Hypergraph& g, std::uint32_t ell, unsigned threads = 1);

/// delta_ell(G). Requires 1 <= ell < r and ell <= n.
std::uint64_t min_degree(const Hypergraph& g, std::uint32_t ell);
std::uint64_t min_degree(const DegreeTable& table);

struct EpsMinDegree {
  std::uint64_t value = 0;
  std::uint64_t exceptions_allowed = 0;  // k = floor(eps * C(n, ell))
  bool capped = false;                   // every subset may be an exception
};

/// delta_ell^eps with at most k exceptions: the (k+1)-th smallest degree,
/// or C(n - ell, r - ell) when k >= C(n, ell).
EpsMinDegree eps_min_degree_with_exceptions(const DegreeTable& table, std::uint64_t k);

/// k = floor(eps * C(n, ell)), computed exactly. eps must be >= 0.
EpsMinDegree eps_min_degree(const DegreeTable& table, const Rational& eps);
std::uint64_t eps_min_degree(const Hypergraph& g, std::uint32_t ell, const Rational& eps);

/// ell-subsets with deg(S) < p * C(n - ell, r - ell), compared exactly.
struct PoorSetReport {
  Rational p;
  std::vector<std::uint64_t> poor;  // colex ranks, ascending
  Rational fraction;                // |poor| / C(n, ell)

  double fraction_approx() const { return to_double(fraction); }
};

PoorSetReport poor_sets(const DegreeTable& table, const Rational& p);
PoorSetReport poor_sets(const Hypergraph& g, std::uint32_t ell, const Rational& p);

/// deg * den < num * cap, where p = num/den.
bool is_poor(std::uint64_t degree, std::uint64_t cap, const Rational& p);

/// CSV with header "rank,subset,degree"; the subset column lists vertices
/// separated by spaces.
void write_degree_csv(std::ostream& out, const DegreeTable& table);

}  // namespace degex
