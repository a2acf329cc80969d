#include "degex/quasirandomness.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "degex/degree.hpp"
#include "degex/error.hpp"
#include "degex/parallel.hpp"
#include "degex/rng.hpp"

namespace degex {

namespace {

constexpr std::uint32_t kMaskLimit = 62;

void require_3graph(const Hypergraph& g, const char* what) {
  if (g.r() != 3) {
    throw ValidationError(std::string(what) + " is defined for 3-graphs, got r = " + std::to_string(g.r()));
  }
}

/// p = num/den with both small enough for 64-bit scaled arithmetic.
struct ScaledDensity {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

ScaledDensity scaled(const Rational& p) {
  require_unit_interval(p, "p");
  const BigInt& den = boost::multiprecision::denominator(p);
  if (den > (BigInt(1) << 32)) throw ValidationError("density denominator must not exceed 2^32");
  return {static_cast<std::int64_t>(boost::multiprecision::numerator(p)), static_cast<std::int64_t>(den)};
}

std::uint32_t pair_index(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

VertexPair pair_at(std::uint32_t index) {
  Vertex v = 1;
  while ((v + 1) * v / 2 <= index) ++v;
  return {index - v * (v - 1) / 2, v};
}

VertexList mask_to_list(std::uint64_t mask) {
  VertexList out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

/// Scaled deviation max(pos, neg) where the optimum is taken over a support set.
struct Best {
  std::int64_t value = -1;
  std::uint64_t mask = 0;
  std::uint64_t mask2 = 0;

  bool improves_on(const Best& other) const {
    if (value != other.value) return value > other.value;
    if (mask != other.mask) return mask < other.mask;
    return mask2 < other.mask2;
  }
};

class PairSweep {
 public:
  PairSweep(const Hypergraph& g, ScaledDensity p) : n_(g.n()), p_(p), incidence_(g.n()) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto e = g.edge(i);
      incidence_[e[0]].push_back(pair_index(e[1], e[2]));
      incidence_[e[1]].push_back(pair_index(e[0], e[2]));
      incidence_[e[2]].push_back(pair_index(e[0], e[1]));
    }
  }

  std::uint32_t pair_count() const { return n_ * (n_ - 1) / 2; }

  /// Pair degrees d_X(uv) for a given X.
  std::vector<std::uint32_t> pair_degrees(std::uint64_t x) const {
    std::vector<std::uint32_t> d(pair_count(), 0);
    for (Vertex v = 0; v < n_; ++v) {
      if ((x >> v) & 1U) {
        for (std::uint32_t pid : incidence_[v]) ++d[pid];
      }
    }
    return d;
  }

  /// Gray-code sweep over the low `low_bits` bits of X with the high bits fixed to `prefix`.
  Best sweep(std::uint64_t prefix, std::uint32_t low_bits) const {
    std::vector<std::uint32_t> d = pair_degrees(prefix);
    std::vector<std::uint64_t> hist(n_ + 1, 0);
    for (std::uint32_t v : d) ++hist[v];
    std::uint64_t x = prefix;
    auto size = static_cast<std::uint32_t>(std::popcount(x));

    Best best;
    auto evaluate = [&] {
      std::int64_t pos = 0;
      std::int64_t neg = 0;
      const std::int64_t target = p_.num * size;
      for (std::uint32_t c = 0; c <= size; ++c) {
        if (hist[c] == 0) continue;
        const std::int64_t w = p_.den * c - target;
        const auto h = static_cast<std::int64_t>(hist[c]);
        if (w > 0) {
          pos += h * w;
        } else {
          neg -= h * w;
        }
      }
      Best here{std::max(pos, neg), x, 0};
      if (here.improves_on(best)) best = here;
    };

    evaluate();
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto v = static_cast<Vertex>(std::countr_zero(i));
      if ((x >> v) & 1U) {
        for (std::uint32_t pid : incidence_[v]) {
          --hist[d[pid]];
          ++hist[--d[pid]];
        }
        --size;
      } else {
        for (std::uint32_t pid : incidence_[v]) {
          --hist[d[pid]];
          ++hist[++d[pid]];
        }
        ++size;
      }
      x ^= std::uint64_t{1} << v;
      evaluate();
    }
    return best;
  }

  /// Direct evaluation for one X.
  Best evaluate(std::uint64_t x) const {
    std::vector<std::uint32_t> d = pair_degrees(x);
    const std::int64_t target = p_.num * std::popcount(x);
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    for (std::uint32_t c : d) {
      const std::int64_t w = p_.den * c - target;
      if (w > 0) {
        pos += w;
      } else {
        neg -= w;
      }
    }
    return {std::max(pos, neg), x, 0};
  }

  Witness12 witness(std::uint64_t x) const {
    std::vector<std::uint32_t> d = pair_degrees(x);
    const std::int64_t target = p_.num * std::popcount(x);
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    for (std::uint32_t c : d) {
      const std::int64_t w = p_.den * c - target;
      (w > 0 ? pos : neg) += w > 0 ? w : -w;
    }
    const bool positive = pos >= neg;
    Witness12 out{mask_to_list(x), {}};
    for (std::uint32_t pid = 0; pid < d.size(); ++pid) {
      const std::int64_t w = p_.den * d[pid] - target;
      if (positive ? w > 0 : w < 0) out.pairs.push_back(pair_at(pid));
    }
    return out;
  }

 private:
  std::uint32_t n_;
  ScaledDensity p_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

Best exhaustive_pair_sweep(const PairSweep& sweep, std::uint32_t n, unsigned threads) {
  std::uint32_t high_bits = 0;
  if (threads > 1) {
    high_bits = std::min<std::uint32_t>(n, static_cast<std::uint32_t>(std::bit_width(std::uint64_t{threads} * 8 - 1)));
  }
  const std::uint32_t low_bits = n - high_bits;
  const std::uint64_t chunks = std::uint64_t{1} << high_bits;
  std::vector<Best> partial(chunks);
  parallel_chunks(chunks, chunks, threads, [&](std::uint64_t c, std::uint64_t, std::uint64_t) {
    partial[c] = sweep.sweep(c << low_bits, low_bits);
  });
  Best best;
  for (const Best& b : partial) {
    if (b.improves_on(best)) best = b;
  }
  return best;
}

std::uint32_t effective_limit(const QrOptions& options, std::uint32_t fallback) {
  return options.exact_limit == 0 ? fallback : options.exact_limit;
}

void check_exact_size(const Hypergraph& g, std::uint32_t limit, const char* what, const char* alternative) {
  if (g.n() > limit || g.n() > kMaskLimit) {
    throw LimitExceeded(std::string(what) + ": n = " + std::to_string(g.n()) + " exceeds the exact limit " +
                        std::to_string(std::min(limit, kMaskLimit)) + "; " + alternative);
  }
}

Rational cube_normalized(const Rational& d, std::uint32_t n) {
  return n == 0 ? Rational(0) : d / Rational(BigInt(n) * n * n);
}

DiscrepancyReport make_report(QrKind kind, QrMode mode, const Hypergraph& g, const Rational& p, std::int64_t scaled,
                              ScaledDensity density) {
  DiscrepancyReport report;
  report.kind = kind;
  report.mode = mode;
  report.n = g.n();
  report.p = p;
  report.discrepancy = Rational(scaled, density.den);
  report.eps_star = cube_normalized(report.discrepancy, g.n());
  return report;
}

}  // namespace

std::uint64_t e12(const Hypergraph& g, std::span<const Vertex> x, std::span<const VertexPair> pairs) {
  require_3graph(g, "e12");
  std::uint64_t count = 0;
  Vertex triple[3];
  for (Vertex v : x) {
    for (auto [a, b] : pairs) {
      triple[0] = v;
      triple[1] = a;
      triple[2] = b;
      std::sort(triple, triple + 3);
      if (triple[0] == triple[1] || triple[1] == triple[2]) continue;
      count += g.contains(triple) ? 1 : 0;
    }
  }
  return count;
}

std::uint64_t e111(const Hypergraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                   std::span<const Vertex> z) {
  require_3graph(g, "e111");
  std::uint64_t count = 0;
  Vertex triple[3];
  for (Vertex a : x) {
    for (Vertex b : y) {
      for (Vertex c : z) {
        triple[0] = a;
        triple[1] = b;
        triple[2] = c;
        std::sort(triple, triple + 3);
        if (triple[0] == triple[1] || triple[1] == triple[2]) continue;
        count += g.contains(triple) ? 1 : 0;
      }
    }
  }
  return count;
}

DiscrepancyReport deviation_12_exact(const Hypergraph& g, const Rational& p, const QrOptions& options) {
  require_3graph(g, "deviation_12_exact");
  const ScaledDensity density = scaled(p);
  check_exact_size(g, effective_limit(options, kDefaultExactLimit12), "deviation_12_exact",
                   "use the sampled mode instead");
  PairSweep sweep(g, density);
  const Best best = exhaustive_pair_sweep(sweep, g.n(), options.threads);
  DiscrepancyReport report = make_report(QrKind::k12, QrMode::exact, g, p, best.value, density);
  report.witness = sweep.witness(best.mask);
  return report;
}

DiscrepancyReport deviation_12_sampled(const Hypergraph& g, const Rational& p, std::uint64_t trials,
                                       std::uint64_t seed, unsigned threads) {
  require_3graph(g, "deviation_12_sampled");
  const ScaledDensity density = scaled(p);
  if (g.n() > 64) throw ValidationError("deviation_12_sampled supports n <= 64");
  PairSweep sweep(g, density);

  Best best;
  if (g.n() <= kMaskLimit && trials >= (std::uint64_t{1} << g.n())) {
    best = exhaustive_pair_sweep(sweep, g.n(), threads);
  } else if (trials > 0) {
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    const std::uint64_t chunks = default_chunks(trials, threads);
    std::vector<Best> partial(chunks);
    parallel_chunks(trials, chunks, threads, [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
      for (std::uint64_t t = first; t < last; ++t) {
        Rng rng = Rng::stream(seed, t);
        const Best here = sweep.evaluate(rng() & all);
        if (here.improves_on(partial[c])) partial[c] = here;
      }
    });
    for (const Best& b : partial) {
      if (b.improves_on(best)) best = b;
    }
  }
  DiscrepancyReport report = make_report(QrKind::k12, QrMode::sampled, g, p, std::max<std::int64_t>(best.value, 0),
                                         density);
  report.witness = sweep.witness(best.value < 0 ? 0 : best.mask);
  report.trials = trials;
  return report;
}

DiscrepancyReport deviation_111_exact(const Hypergraph& g, const Rational& p, const QrOptions& options) {
  require_3graph(g, "deviation_111_exact");
  const ScaledDensity density = scaled(p);
  check_exact_size(g, effective_limit(options, kDefaultExactLimit111), "deviation_111_exact",
                   "raise --exact-limit if the runtime is acceptable");
  const std::uint32_t n = g.n();

  // link[y * n + z]: the x with {x, y, z} an edge.
  std::vector<std::uint64_t> link(std::size_t{n} * n, 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        link[std::size_t{e[a]} * n + e[b]] |= std::uint64_t{1} << e[3 - a - b];
      }
    }
  }

  auto score = [&](std::span<const std::int64_t> ez, std::int64_t target) {
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    for (std::int64_t c : ez) {
      const std::int64_t w = density.den * c - target;
      if (w > 0) {
        pos += w;
      } else {
        neg -= w;
      }
    }
    return std::pair{pos, neg};
  };

  const std::uint64_t x_count = std::uint64_t{1} << n;
  const std::uint64_t chunks = default_chunks(x_count, options.threads);
  std::vector<Best> partial(chunks);
  parallel_chunks(x_count, chunks, options.threads, [&](std::uint64_t c, std::uint64_t first, std::uint64_t last) {
    std::vector<std::int64_t> cnt(std::size_t{n} * n);
    std::vector<std::int64_t> ez(n);
    for (std::uint64_t x = first; x < last; ++x) {
      const std::int64_t sx = std::popcount(x);
      for (std::size_t i = 0; i < cnt.size(); ++i) cnt[i] = std::popcount(x & link[i]);
      std::fill(ez.begin(), ez.end(), 0);
      std::uint64_t y = 0;
      std::int64_t sy = 0;
      auto consider = [&] {
        auto [pos, neg] = score(ez, density.num * sx * sy);
        Best here{std::max(pos, neg), x, y};
        if (here.improves_on(partial[c])) partial[c] = here;
      };
      consider();
      for (std::uint64_t i = 1; i < x_count; ++i) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(i));
        const std::int64_t* row = cnt.data() + std::size_t{v} * n;
        if ((y >> v) & 1U) {
          for (std::uint32_t z = 0; z < n; ++z) ez[z] -= row[z];
          --sy;
        } else {
          for (std::uint32_t z = 0; z < n; ++z) ez[z] += row[z];
          ++sy;
        }
        y ^= std::uint64_t{1} << v;
        consider();
      }
    }
  });
  Best best;
  for (const Best& b : partial) {
    if (b.improves_on(best)) best = b;
  }

  DiscrepancyReport report = make_report(QrKind::k111, QrMode::exact, g, p, best.value, density);
  std::vector<std::int64_t> ez(n, 0);
  for (std::uint32_t yv = 0; yv < n; ++yv) {
    if (!((best.mask2 >> yv) & 1U)) continue;
    for (std::uint32_t z = 0; z < n; ++z) ez[z] += std::popcount(best.mask & link[std::size_t{yv} * n + z]);
  }
  const std::int64_t target = density.num * std::popcount(best.mask) * std::popcount(best.mask2);
  auto [pos, neg] = score(ez, target);
  Witness111 w{mask_to_list(best.mask), mask_to_list(best.mask2), {}};
  for (std::uint32_t z = 0; z < n; ++z) {
    const std::int64_t v = density.den * ez[z] - target;
    if (pos >= neg ? v > 0 : v < 0) w.z.push_back(z);
  }
  report.witness = std::move(w);
  return report;
}

ImplicationVerdict check_qr_codegree_implication(const Hypergraph& g, const Rational& p, const QrOptions& options) {
  require_3graph(g, "check_qr_codegree_implication");
  if (g.n() < 3) throw ValidationError("check_qr_codegree_implication needs n >= 3");
  const DiscrepancyReport report = deviation_12_exact(g, p, options);
  const std::uint32_t n = g.n();

  ImplicationVerdict verdict;
  verdict.discrepancy = report.discrepancy;
  verdict.eps_star = report.eps_star;

  // floor(sqrt(eps*) * C) = isqrt(floor(eps* * C^2))
  const BigInt pairs = binom(n, 2);
  const BigInt k = isqrt(floor(report.eps_star * Rational(pairs * pairs)));
  const DegreeTable table = degree_table(g, 2);
  const std::uint64_t total = table.degrees.size();
  const EpsMinDegree eps_degree =
      eps_min_degree_with_exceptions(table, k >= total ? total : static_cast<std::uint64_t>(k));
  verdict.exceptions_allowed = static_cast<std::uint64_t>(k);
  verdict.capped = eps_degree.capped;
  verdict.lhs = eps_degree.value;
  verdict.rhs = (to_real(p) - 4 * sqrt(to_real(report.eps_star))) * n;

  // lhs >= p n - 4 n sqrt(eps*)  <=>  gap <= 0  or  16 n^2 eps* >= gap^2, gap = p n - lhs.
  const Rational gap = p * Rational(n) - Rational(verdict.lhs);
  verdict.holds = gap <= 0 || Rational(16) * Rational(n) * Rational(n) * report.eps_star >= gap * gap;
  return verdict;
}

std::string to_string(QrKind kind) { return kind == QrKind::k12 ? "12" : "111"; }
std::string to_string(QrMode mode) { return mode == QrMode::exact ? "exact" : "sampled"; }

}  // namespace degex
