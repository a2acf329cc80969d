#include "degex/degree.hpp"

#include <algorithm>
#include <string>

#include "degex/error.hpp"
#include "degex/parallel.hpp"

namespace degex {

namespace {

void check_ell(const Hypergraph& g, std::uint32_t ell) {
  if (ell == 0 || ell >= g.r()) {
    throw ValidationError("ell must satisfy 1 <= ell < r = " + std::to_string(g.r()) + ", got " +
                          std::to_string(ell));
  }
}

}  // namespace

std::uint64_t degree_of(const Hypergraph& g, std::span<const Vertex> s) {
  if (s.size() >= g.r()) {
    throw ValidationError("degree_of: |S| = " + std::to_string(s.size()) + " must be below r = " +
                          std::to_string(g.r()));
  }
  colex_rank(s, g.n());  // validates order and range
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    count += std::includes(e.begin(), e.end(), s.begin(), s.end()) ? 1 : 0;
  }
  return count;
}

DegreeTable degree_table(const Hypergraph& g, std::uint32_t ell, unsigned threads) {
  check_ell(g, ell);
  DegreeTable table{g.n(), g.r(), ell, {}};
  const std::uint64_t size = binom_u64(g.n(), ell);
  const std::uint32_t r = g.r();

  auto accumulate = [&](std::vector<std::uint64_t>& into, std::uint64_t first, std::uint64_t last) {
    VertexList positions(ell);
    VertexList sub(ell);
    for (std::uint64_t i = first; i < last; ++i) {
      auto e = g.edge(i);
      for (std::uint32_t j = 0; j < ell; ++j) positions[j] = j;
      do {
        for (std::uint32_t j = 0; j < ell; ++j) sub[j] = e[positions[j]];
        ++into[colex_rank_unchecked(sub)];
      } while (next_colex(positions, r));
    }
  };

  const std::uint64_t edges = g.edge_count();
  if (threads <= 1 || edges < 2) {
    table.degrees.assign(size, 0);
    accumulate(table.degrees, 0, edges);
    return table;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, edges);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_chunks(edges, chunks, threads, [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
    partial[c].assign(size, 0);
    accumulate(partial[c], first, last);
  });
  table.degrees = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) {
    for (std::uint64_t i = 0; i < size; ++i) table.degrees[i] += partial[c][i];
  }
  return table;
}

std::uint64_t min_degree(const DegreeTable& table) {
  if (table.degrees.empty()) {
    throw ValidationError("min_degree needs n >= ell (n = " + std::to_string(table.n) + ", ell = " +
                          std::to_string(table.ell) + ")");
  }
  return *std::min_element(table.degrees.begin(), table.degrees.end());
}

std::uint64_t min_degree(const Hypergraph& g, std::uint32_t ell) { return min_degree(degree_table(g, ell)); }

EpsMinDegree eps_min_degree_with_exceptions(const DegreeTable& table, std::uint64_t k) {
  const std::uint64_t total = table.degrees.size();
  if (k >= total) return {table.max_possible(), k, true};
  std::vector<std::uint64_t> sorted = table.degrees;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end());
  return {sorted[k], k, false};
}

EpsMinDegree eps_min_degree(const DegreeTable& table, const Rational& eps) {
  if (eps < 0) throw ValidationError("eps must be nonnegative, got " + to_string(eps));
  const BigInt k = floor(eps * Rational(table.degrees.size()));
  const std::uint64_t total = table.degrees.size();
  return eps_min_degree_with_exceptions(table, k >= total ? total : static_cast<std::uint64_t>(k));
}

std::uint64_t eps_min_degree(const Hypergraph& g, std::uint32_t ell, const Rational& eps) {
  return eps_min_degree(degree_table(g, ell), eps).value;
}

bool is_poor(std::uint64_t degree, std::uint64_t cap, const Rational& p) {
  return BigInt(degree) * boost::multiprecision::denominator(p) < boost::multiprecision::numerator(p) * cap;
}

PoorSetReport poor_sets(const DegreeTable& table, const Rational& p) {
  require_unit_interval(p, "p");
  PoorSetReport report{p, {}, 0};
  const std::uint64_t cap = table.max_possible();
  for (std::uint64_t rank = 0; rank < table.degrees.size(); ++rank) {
    if (is_poor(table.degrees[rank], cap, p)) report.poor.push_back(rank);
  }
  if (!table.degrees.empty()) report.fraction = Rational(report.poor.size(), table.degrees.size());
  return report;
}

PoorSetReport poor_sets(const Hypergraph& g, std::uint32_t ell, const Rational& p) {
  require_unit_interval(p, "p");
  return poor_sets(degree_table(g, ell), p);
}

void write_degree_csv(std::ostream& out, const DegreeTable& table) {
  out << "rank,subset,degree\n";
  VertexList s(table.ell);
  for (std::uint64_t rank = 0; rank < table.degrees.size(); ++rank) {
    colex_unrank_into(rank, s);
    out << rank << ',';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << ',' << table.degrees[rank] << '\n';
  }
}

}  // namespace degex
