#include "degex/extraction.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "degex/degree.hpp"
#include "degex/error.hpp"
#include "degex/parallel.hpp"
#include "degex/rng.hpp"

namespace degex {

namespace {

void check_ell(const Hypergraph& g, std::uint32_t ell) {
  if (ell == 0 || ell >= g.r()) {
    throw ValidationError("ell must satisfy 1 <= ell < r = " + std::to_string(g.r()) + ", got " +
                          std::to_string(ell));
  }
}

void check_m(const Hypergraph& g, std::uint32_t ell, std::uint32_t m) {
  if (m > g.n()) {
    throw ValidationError("m = " + std::to_string(m) + " exceeds n = " + std::to_string(g.n()));
  }
  if (m < ell) {
    throw ValidationError("m = " + std::to_string(m) + " is smaller than ell = " + std::to_string(ell));
  }
}

std::uint64_t checked_count(std::uint64_t n, std::uint64_t k, const char* what, std::uint64_t limit) {
  std::uint64_t count = 0;
  try {
    count = binom_u64(n, k);
  } catch (const OverflowError&) {
    throw LimitExceeded(std::string(what) + ": C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") exceeds 64 bits and the enumeration limit " + std::to_string(limit));
  }
  if (count > limit) {
    throw LimitExceeded(std::string(what) + ": C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") = " + std::to_string(count) + " subsets exceeds the enumeration limit " +
                        std::to_string(limit));
  }
  return count;
}

/// exp(-delta^2 m / (2 (r - ell)^2))
Real azuma_factor(const Rational& delta, std::uint32_t m, std::uint32_t r, std::uint32_t ell) {
  const Real d = to_real(delta);
  const Real gap = r - ell;
  return exp(-(d * d * m) / (2 * gap * gap));
}

/// Reusable buffers for the per-subset minimum-degree scan.
class InducedScanner {
 public:
  InducedScanner(const Hypergraph& g, std::uint32_t ell, std::uint32_t m)
      : g_(g), ell_(ell), m_(m), table_(binom_u64(m, ell)), positions_(g.r()), vertices_(g.r()),
        sub_positions_(ell), sub_(ell) {}

  std::uint64_t min_degree(std::span<const Vertex> subset) {
    std::fill(table_.begin(), table_.end(), 0);
    const std::uint32_t r = g_.r();
    if (m_ >= r) {
      for (std::uint32_t j = 0; j < r; ++j) positions_[j] = j;
      do {
        for (std::uint32_t j = 0; j < r; ++j) vertices_[j] = subset[positions_[j]];
        if (!g_.contains(vertices_)) continue;
        for (std::uint32_t j = 0; j < ell_; ++j) sub_positions_[j] = j;
        do {
          for (std::uint32_t j = 0; j < ell_; ++j) sub_[j] = positions_[sub_positions_[j]];
          ++table_[colex_rank_unchecked(sub_)];
        } while (next_colex(sub_positions_, r));
      } while (next_colex(positions_, m_));
    }
    return *std::min_element(table_.begin(), table_.end());
  }

 private:
  const Hypergraph& g_;
  std::uint32_t ell_;
  std::uint32_t m_;
  std::vector<std::uint64_t> table_;
  VertexList positions_;
  VertexList vertices_;
  VertexList sub_positions_;
  VertexList sub_;
};

std::uint64_t recheck_min_degree(const Hypergraph& g, std::span<const Vertex> subset, std::uint32_t ell) {
  auto [h, map] = induced(g, subset);
  return min_degree(degree_table(h, ell));
}

struct NeighbourhoodCounter {
  std::vector<std::uint64_t> neighbours;  // (r - ell)-sets, as masks over V \ S
  std::uint32_t width = 0;                // n - ell
};

NeighbourhoodCounter neighbourhood_masks(const Hypergraph& g, std::span<const Vertex> s) {
  NeighbourhoodCounter out;
  out.width = g.n() - static_cast<std::uint32_t>(s.size());
  std::vector<std::uint32_t> index(g.n(), 0);
  for (Vertex v = 0, next = 0; v < g.n(); ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) index[v] = next++;
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    if (!std::includes(e.begin(), e.end(), s.begin(), s.end())) continue;
    std::uint64_t mask = 0;
    for (Vertex v : e) {
      if (!std::binary_search(s.begin(), s.end(), v)) mask |= std::uint64_t{1} << index[v];
    }
    out.neighbours.push_back(mask);
  }
  return out;
}

/// phi_S given the integer cut-off floor(t); T is bad when its neighbour count <= cutoff.
std::uint64_t count_bad_masks(const NeighbourhoodCounter& nb, std::uint32_t t_size, const BigInt& cutoff) {
  if (cutoff < 0) return 0;
  const std::uint64_t limit = cutoff > std::numeric_limits<std::uint64_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(cutoff);
  if (nb.neighbours.size() <= limit) return binom_u64(nb.width, t_size);

  const std::uint64_t total = binom_u64(nb.width, t_size);
  if (t_size == 0) return 1;  // the single empty T contains no (r - ell)-set
  std::uint64_t bad = 0;
  std::uint64_t t = (t_size == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << t_size) - 1;
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t inside = 0;
    for (std::uint64_t mask : nb.neighbours) {
      inside += (mask & ~t) == 0 ? 1 : 0;
      if (inside > limit) break;
    }
    bad += inside <= limit ? 1 : 0;
    if (i + 1 < total) t = next_same_popcount(t);
  }
  return bad;
}

void check_subset_s(const Hypergraph& g, std::span<const Vertex> s) {
  if (s.empty() || s.size() >= g.r()) {
    throw ValidationError("S must have between 1 and r - 1 = " + std::to_string(g.r() - 1) + " vertices");
  }
  colex_rank(s, g.n());
}

void require_small_ground_set(const Hypergraph& g) {
  if (g.n() > 64) {
    throw ValidationError("phi_S enumeration supports n <= 64, got n = " + std::to_string(g.n()));
  }
}

}  // namespace

TheoremParams theorem_params(std::uint32_t r, std::uint32_t ell, const Rational& delta, std::uint32_t m) {
  if (ell == 0 || ell >= r) {
    throw ValidationError("theorem_params needs 1 <= ell < r, got r = " + std::to_string(r) + ", ell = " +
                          std::to_string(ell));
  }
  if (delta <= 0 || delta >= 1) throw ValidationError("delta must lie in (0, 1), got " + to_string(delta));
  if (m < r) throw ValidationError("m must be at least r = " + std::to_string(r));

  TheoremParams params;
  params.r = r;
  params.ell = ell;
  params.delta = delta;
  params.m = m;

  const Real d = to_real(delta);
  const Real log_inv = log(1 / d);
  const Real gap = r - ell;
  const Real base = 26 * Real(ell) * gap * gap;
  params.m0_unrounded = base / (d * d) * log_inv;
  params.m0 = to_u64(BigInt(ceil(params.m0_unrounded)));
  params.eps = Rational(1, 2 * boost::multiprecision::pow(BigInt(m), ell));
  params.delta_valid = (1 / d >= base * log_inv) && (Real(ell) * log_inv >= log(Real(2)));
  return params;
}

DegreeThreshold good_threshold(std::uint32_t r, std::uint32_t ell, std::uint32_t m, const Rational& p,
                               const Rational& delta) {
  DegreeThreshold t;
  t.bound = (p - delta) * Rational(m < ell ? 0 : binom_u64(m - ell, r - ell));
  t.required = t.bound < 0 ? 0 : to_u64(floor(t.bound) + 1);
  return t;
}

std::uint64_t induced_min_degree(const Hypergraph& g, std::span<const Vertex> subset, std::uint32_t ell) {
  check_ell(g, ell);
  const auto m = static_cast<std::uint32_t>(subset.size());
  check_m(g, ell, m);
  colex_rank(subset, g.n());
  return InducedScanner(g, ell, m).min_degree(subset);
}

ExtractionReport extract_random(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                                const Rational& delta, std::uint64_t budget, std::uint64_t seed, unsigned threads) {
  check_ell(g, ell);
  check_m(g, ell, m);
  require_unit_interval(p, "p");
  require_unit_interval(delta, "delta");
  if (budget == 0) throw ValidationError("budget must be at least 1");

  ExtractionReport report;
  report.threshold = good_threshold(g.r(), ell, m, p, delta);
  report.seed = seed;

  struct Attempt {
    VertexList subset;
    std::uint64_t min_degree = 0;
  };
  const std::uint64_t batch = std::max<std::uint64_t>(64, std::uint64_t{threads} * 16);
  std::vector<Attempt> results;
  std::optional<Attempt> best;

  for (std::uint64_t first = 0; first < budget; first += batch) {
    const std::uint64_t last = std::min(budget, first + batch);
    results.assign(last - first, {});
    parallel_chunks(last - first, threads <= 1 ? 1 : threads, threads,
                    [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
                      InducedScanner scanner(g, ell, m);
                      for (std::uint64_t i = lo; i < hi; ++i) {
                        Rng rng = Rng::stream(seed, first + i);
                        results[i].subset = random_ksubset(g.n(), m, rng);
                        results[i].min_degree = scanner.min_degree(results[i].subset);
                      }
                    });
    for (std::uint64_t i = 0; i < results.size(); ++i) {
      Attempt& a = results[i];
      if (!best || a.min_degree > best->min_degree) best = a;
      if (a.min_degree >= report.threshold.required) {
        report.success = true;
        report.attempts = first + i + 1;
        best = std::move(a);
        break;
      }
    }
    if (report.success) break;
  }
  if (!report.success) report.attempts = budget;

  report.achieved_min_degree = best->min_degree;
  report.subset = std::move(best->subset);
  if (recheck_min_degree(g, *report.subset, ell) != report.achieved_min_degree) {
    throw std::logic_error("extract_random: induced-subgraph recheck disagrees with the search");
  }
  return report;
}

ExhaustiveResult extract_exhaustive(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                                    const Rational& delta, const EnumerationOptions& options) {
  check_ell(g, ell);
  check_m(g, ell, m);
  require_unit_interval(p, "p");
  require_unit_interval(delta, "delta");

  ExhaustiveResult result;
  result.threshold = good_threshold(g.r(), ell, m, p, delta);
  result.examined = checked_count(g.n(), m, "extract_exhaustive", options.limit);

  const std::uint64_t chunks = default_chunks(result.examined, options.threads);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_chunks(result.examined, chunks, options.threads,
                  [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
                    InducedScanner scanner(g, ell, m);
                    std::uint64_t rank = first;
                    for_each_ksubset_in_range(g.n(), m, first, last, [&](std::span<const Vertex> x) {
                      if (scanner.min_degree(x) >= result.threshold.required) partial[c].push_back(rank);
                      ++rank;
                    });
                  });
  for (auto& part : partial) result.good_ranks.insert(result.good_ranks.end(), part.begin(), part.end());
  return result;
}

AuditReport audit_eq3(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                      const EnumerationOptions& options) {
  check_ell(g, ell);
  check_m(g, ell, m);
  require_unit_interval(p, "p");
  const std::uint64_t total = checked_count(g.n(), m, "audit_eq3", options.limit);

  const DegreeTable table = degree_table(g, ell);
  const PoorSetReport poor = poor_sets(table, p);
  std::vector<bool> is_poor_rank(table.degrees.size(), false);
  for (std::uint64_t rank : poor.poor) is_poor_rank[rank] = true;

  const std::uint64_t chunks = default_chunks(total, options.threads);
  std::vector<std::uint64_t> partial(chunks, 0);
  parallel_chunks(total, chunks, options.threads, [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
    VertexList positions(ell);
    VertexList sub(ell);
    for_each_ksubset_in_range(g.n(), m, first, last, [&](std::span<const Vertex> x) {
      for (std::uint32_t j = 0; j < ell; ++j) positions[j] = j;
      do {
        for (std::uint32_t j = 0; j < ell; ++j) sub[j] = x[positions[j]];
        if (is_poor_rank[colex_rank_unchecked(sub)]) return;
      } while (next_colex(positions, m));
      ++partial[c];
    });
  });
  std::uint64_t poor_free = 0;
  for (std::uint64_t v : partial) poor_free += v;

  const Rational eps_eff = poor.fraction;
  const BigInt m_pow = boost::multiprecision::pow(BigInt(m), ell);
  const Rational rhs = (Rational(1) - eps_eff * Rational(m_pow)) * Rational(total);
  const BigInt union_bound = BigInt(total) - BigInt(poor.poor.size()) * binom(g.n() - ell, m - ell);

  AuditReport report;
  report.inequality_id = Inequality::eq3_rich_count;
  report.lhs = Rational(poor_free);
  report.rhs = rhs;
  report.relation = Relation::at_least;
  report.holds = report.lhs >= rhs;
  report.context = {
      {"n", Rational(g.n())},
      {"r", Rational(g.r())},
      {"ell", Rational(ell)},
      {"m", Rational(m)},
      {"p", p},
      {"poor_count", Rational(poor.poor.size())},
      {"eps_eff", eps_eff},
      {"m_subsets", Rational(total)},
      {"union_bound", Rational(union_bound)},
  };
  return report;
}

std::uint64_t count_bad_for(const Hypergraph& g, std::span<const Vertex> s, std::uint32_t m, const Rational& p,
                            const Rational& delta) {
  check_subset_s(g, s);
  require_small_ground_set(g);
  require_unit_interval(p, "p");
  require_unit_interval(delta, "delta");
  const auto ell = static_cast<std::uint32_t>(s.size());
  check_m(g, ell, m);
  const std::uint64_t deg = degree_of(g, s);
  if (is_poor(deg, binom_u64(g.n() - ell, g.r() - ell), p)) {
    throw ValidationError("S is poor (degree " + std::to_string(deg) + "); the bound is only claimed for rich S");
  }
  const DegreeThreshold t = good_threshold(g.r(), ell, m, p, delta);
  return count_bad_masks(neighbourhood_masks(g, s), m - ell, floor(t.bound));
}

AuditReport audit_eq2_phi(const Hypergraph& g, std::span<const Vertex> s, std::uint32_t m, const Rational& p,
                          const Rational& delta, const EnumerationOptions& options) {
  check_subset_s(g, s);
  require_small_ground_set(g);
  const auto ell = static_cast<std::uint32_t>(s.size());
  check_m(g, ell, m);
  const std::uint64_t candidates = checked_count(g.n() - ell, m - ell, "audit_eq2_phi", options.limit);
  const std::uint64_t phi = count_bad_for(g, s, m, p, delta);

  const Real rhs = Real(candidates) * azuma_factor(delta, m, g.r(), ell);
  AuditReport report;
  report.inequality_id = Inequality::eq2_phi_bound;
  report.lhs = Rational(phi);
  report.rhs = rhs;
  report.relation = Relation::at_most;
  report.holds = Real(phi) <= rhs;
  report.context = {
      {"n", Rational(g.n())},
      {"r", Rational(g.r())},
      {"ell", Rational(ell)},
      {"m", Rational(m)},
      {"p", p},
      {"delta", delta},
      {"S", VertexList(s.begin(), s.end())},
      {"degree_S", Rational(degree_of(g, s))},
      {"bad_threshold", good_threshold(g.r(), ell, m, p, delta).bound},
      {"candidate_sets", Rational(candidates)},
  };
  return report;
}

AuditReport audit_bad_total(const Hypergraph& g, std::uint32_t ell, std::uint32_t m, const Rational& p,
                            const Rational& delta, const EnumerationOptions& options) {
  check_ell(g, ell);
  check_m(g, ell, m);
  require_small_ground_set(g);
  require_unit_interval(p, "p");
  require_unit_interval(delta, "delta");

  const DegreeTable table = degree_table(g, ell);
  const std::uint64_t cap = table.max_possible();
  std::vector<std::uint64_t> rich;
  for (std::uint64_t rank = 0; rank < table.degrees.size(); ++rank) {
    if (!is_poor(table.degrees[rank], cap, p)) rich.push_back(rank);
  }
  const std::uint64_t per_set = checked_count(g.n() - ell, m - ell, "audit_bad_total", options.limit);
  if (!rich.empty() && per_set > options.limit / rich.size()) {
    throw LimitExceeded("audit_bad_total: " + std::to_string(rich.size()) + " rich sets x " +
                        std::to_string(per_set) + " subsets exceeds the enumeration limit " +
                        std::to_string(options.limit));
  }

  const BigInt cutoff = floor(good_threshold(g.r(), ell, m, p, delta).bound);
  const std::uint64_t chunks = default_chunks(rich.size(), options.threads);
  std::vector<BigInt> partial(chunks, 0);
  parallel_chunks(rich.size(), chunks, options.threads, [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
    VertexList s(ell);
    for (std::uint64_t i = first; i < last; ++i) {
      colex_unrank_into(rich[i], s);
      partial[c] += count_bad_masks(neighbourhood_masks(g, s), m - ell, cutoff);
    }
  });
  BigInt total_bad = 0;
  for (const BigInt& v : partial) total_bad += v;

  const BigInt subsets = binom(g.n(), m);
  const Real intermediate = Real(subsets) * Real(binom(m, ell)) * azuma_factor(delta, m, g.r(), ell);

  AuditReport report;
  report.inequality_id = Inequality::bad_total_bound;
  report.lhs = Rational(total_bad);
  report.rhs = Rational(subsets, 2);
  report.relation = Relation::at_most;
  report.holds = report.lhs <= Rational(subsets, 2);
  report.context = {
      {"n", Rational(g.n())},
      {"r", Rational(g.r())},
      {"ell", Rational(ell)},
      {"m", Rational(m)},
      {"p", p},
      {"delta", delta},
      {"rich_count", Rational(rich.size())},
      {"bad_threshold", good_threshold(g.r(), ell, m, p, delta).bound},
      {"intermediate_bound", intermediate},
      {"intermediate_holds", Rational(Real(total_bad) <= intermediate ? 1 : 0)},
  };
  return report;
}

std::string to_string(Inequality id) {
  switch (id) {
    case Inequality::eq3_rich_count:
      return "eq3_rich_count";
    case Inequality::eq2_phi_bound:
      return "eq2_phi_bound";
    case Inequality::bad_total_bound:
      return "bad_total_bound";
  }
  return "unknown";
}

std::string to_string(Relation relation) { return relation == Relation::at_least ? ">=" : "<="; }

}  // namespace degex
